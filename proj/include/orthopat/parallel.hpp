// Execution policy shared by the kernels that have both a serial reference
// path and an OpenMP path.
#pragma once

namespace orthopat {

class Execution {
 public:
  /// The serial reference implementation.
  static constexpr Execution serial() noexcept { return Execution(1, true); }
  /// OpenMP implementation; workers <= 0 means omp_get_max_threads().
  static constexpr Execution parallel(int workers = 0) noexcept { return Execution(workers, false); }

  constexpr bool is_serial() const noexcept { return serial_; }
  /// Resolved worker count (>= 1).
  int workers() const noexcept;

 private:
  constexpr Execution(int workers, bool serial) noexcept : workers_(workers), serial_(serial) {}
  int workers_;
  bool serial_;
};

}  // namespace orthopat
