// Census of indecomposable SQ classes by orderly generation. Candidates are
// doubly lexical: rows non-increasing as masks, and columns non-increasing
// when read from row 0 with column n-1 first. Every class has such a member.

#include <algorithm>
#include <bit>
#include <set>

#include "orthopat/pattern.hpp"

namespace orthopat {

namespace {

struct PrecedesLess {
  bool operator()(const ZeroPattern& a, const ZeroPattern& b) const { return pattern_precedes(a, b); }
};

using ClassSet = std::set<ZeroPattern, PrecedesLess>;

class CensusWalker {
 public:
  CensusWalker(int n, const std::vector<RowMask>& candidates)
      : n_(n), candidates_(candidates), rows_(n) {}

  // Explores every matrix whose first row is candidates_[first].
  void run_from(std::size_t first, ClassSet& out) {
    out_ = &out;
    const RowMask all_tied = n_ > 1 ? ((RowMask{1} << (n_ - 1)) - 1) : 0;
    if (!place(0, first, all_tied)) return;
    extend(1, first, tie_after(candidates_[first], all_tied));
  }

 private:
  // Bit j of `tied` is set while columns j+1 and j agree on all placed rows.
  static RowMask tie_after(RowMask row, RowMask tied) {
    const RowMask hi = row >> 1;  // bit j holds column j+1
    return tied & ~(hi ^ row);
  }

  bool place(int depth, std::size_t idx, RowMask tied) {
    const RowMask row = candidates_[idx];
    const RowMask hi = row >> 1;
    if (tied & row & ~hi) return false;  // column j would overtake column j+1
    for (int r = 0; r < depth; ++r)
      if (std::popcount(rows_[r] & row) == 1) return false;
    rows_[depth] = row;
    return true;
  }

  void extend(int depth, std::size_t from, RowMask tied) {
    if (depth == n_) {
      finish();
      return;
    }
    for (std::size_t idx = from; idx < candidates_.size(); ++idx) {
      if (!place(depth, idx, tied)) continue;
      extend(depth + 1, idx, tie_after(candidates_[idx], tied));
    }
  }

  void finish() {
    ZeroPattern p(n_, rows_);
    for (int j = 0; j < n_; ++j)
      if (p.column_sum(j) < 2) return;
    if (!is_quadrangular(p) || !is_indecomposable(p) || !is_sq(p)) return;
    out_->insert(canonical_class(p));
  }

  int n_;
  const std::vector<RowMask>& candidates_;
  std::vector<RowMask> rows_;
  ClassSet* out_ = nullptr;
};

}  // namespace

std::vector<ZeroPattern> enumerate_indecomposable_sq(int n, Execution exec) {
  if (n < 1 || n > kMaxCensusOrder)
    throw InvalidArgument("census order must be in 1.." + std::to_string(kMaxCensusOrder));
  if (n == 1) return {ZeroPattern::full(1)};

  std::vector<RowMask> candidates;
  for (RowMask m = (RowMask{1} << n) - 1; m > 0; --m)
    if (std::popcount(m) >= 2) candidates.push_back(m);

  ClassSet classes;
  const auto first_count = static_cast<std::int64_t>(candidates.size());
  if (exec.is_serial()) {
    CensusWalker walker(n, candidates);
    for (std::int64_t f = 0; f < first_count; ++f) walker.run_from(static_cast<std::size_t>(f), classes);
  } else {
#pragma omp parallel num_threads(exec.workers())
    {
      ClassSet local;
      CensusWalker walker(n, candidates);
#pragma omp for schedule(dynamic, 1) nowait
      for (std::int64_t f = 0; f < first_count; ++f) walker.run_from(static_cast<std::size_t>(f), local);
#pragma omp critical(orthopat_census_merge)
      classes.merge(local);
    }
  }
  return {classes.begin(), classes.end()};
}

}  // namespace orthopat
