#include "orthopat/parallel.hpp"

#include <omp.h>

namespace orthopat {

int Execution::workers() const noexcept {
  if (serial_) return 1;
  if (workers_ > 0) return workers_;
  const int max = omp_get_max_threads();
  return max > 0 ? max : 1;
}

}  // namespace orthopat
