#include "orthopat/obstructions.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <unordered_set>

namespace orthopat {

Grid Grid::sub(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
  Grid g;
  g.cols = static_cast<int>(col_idx.size());
  for (int r : row_idx) {
    RowMask m = 0;
    for (std::size_t c = 0; c < col_idx.size(); ++c)
      if ((rows[r] >> col_idx[c]) & 1U) m |= RowMask{1} << c;
    g.rows.push_back(m);
  }
  return g;
}

namespace {

// A subgrid with a unique perfect matching can be ordered lower triangular
// with a nonzero diagonal. Build such orders one (row, column) pair at a
// time: the next column must vanish on every chosen row. Which pairs can
// follow depends only on the chosen row set, so row sets are memoized.
class Staircase {
 public:
  explicit Staircase(const Grid& g) : g_(g) {
    for (int c = 0; c < g.cols; ++c) {
      RowMask col = 0;
      for (std::size_t r = 0; r < g.rows.size(); ++r)
        if ((g.rows[r] >> c) & 1U) col |= RowMask{1} << r;
      columns_.push_back(col);
    }
    limit_ = std::min<int>(static_cast<int>(g.rows.size()), g.cols);
  }

  int longest() {
    visit(0);
    return best_;
  }

 private:
  void visit(RowMask chosen) {
    if (best_ == limit_ || !seen_.insert(chosen).second) return;
    best_ = std::max(best_, std::popcount(chosen));
    for (RowMask col : columns_) {
      if (col & chosen) continue;
      for (RowMask rest = col; rest; rest &= rest - 1) visit(chosen | (rest & -rest));
    }
  }

  const Grid& g_;
  std::vector<RowMask> columns_;
  std::unordered_set<RowMask> seen_;
  int limit_ = 0;
  int best_ = 0;
};

long long matchings(const Grid& g, std::size_t row, RowMask used, long long cap) {
  if (row == g.rows.size()) return 1;
  long long total = 0;
  for (RowMask free = g.rows[row] & ~used; free; free &= free - 1) {
    total += matchings(g, row + 1, used | (free & -free), cap - total);
    if (total >= cap) return total;
  }
  return total;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (k <= n) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<int> bits_of(RowMask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// S (the rows meeting C) if C is forced dependent, else nullopt.
std::optional<std::vector<int>> forced_dependent(const ZeroPattern& p, const std::vector<int>& c) {
  RowMask s_mask = 0;
  RowMask c_mask = 0;
  for (int j : c) {
    s_mask |= p.column(j);
    c_mask |= RowMask{1} << j;
  }
  const std::vector<int> s = bits_of(s_mask);
  const int needed = static_cast<int>(s.size()) - static_cast<int>(c.size()) + 1;
  if (needed > 0) {
    const std::vector<int> others = bits_of(p.all_columns() & ~c_mask);
    if (forced_rank_lower_bound(Grid::of(p).sub(s, others)) < needed) return std::nullopt;
  }
  return s;
}

}  // namespace

int forced_rank_lower_bound(const Grid& g) {
  if (g.rows.size() > static_cast<std::size_t>(kMaxOrder) || g.cols > kMaxOrder)
    throw InvalidArgument("grid larger than 64 x 64");
  return Staircase(g).longest();
}

int forced_rank_lower_bound(const ZeroPattern& p) { return forced_rank_lower_bound(Grid::of(p)); }

long long count_perfect_matchings(const Grid& g, long long cap) {
  if (static_cast<int>(g.rows.size()) != g.cols) throw InvalidArgument("perfect matchings need a square grid");
  return matchings(g, 0, 0, cap);
}

std::string_view verdict_name(Verdict v) { return v == Verdict::Infeasible ? "infeasible" : "unknown"; }

std::string_view reason_name(ObstructionReason r) {
  switch (r) {
    case ObstructionReason::ColumnDependence: return "column-dependence";
    case ObstructionReason::TraceParity: return "trace-parity";
    case ObstructionReason::TraceNMinus2: return "trace-n-minus-2";
    case ObstructionReason::None: break;
  }
  return "none";
}

ObstructionReport column_dependence_infeasible(const ZeroPattern& p, Execution exec) {
  struct Candidate {
    bool transposed;
    std::vector<int> c;
  };
  const ZeroPattern sides[2] = {p, p.transpose()};
  std::vector<Candidate> candidates;
  for (int side = 0; side < 2; ++side)
    for (int k = 2; k <= 3; ++k)
      for (auto& c : subsets_of_size(p.n(), k)) candidates.push_back({side == 1, std::move(c)});

  const auto total = static_cast<std::int64_t>(candidates.size());
  std::atomic<std::int64_t> first{total};
  auto test = [&](std::int64_t i) {
    if (i >= first.load(std::memory_order_relaxed)) return;
    const Candidate& cand = candidates[static_cast<std::size_t>(i)];
    if (!forced_dependent(sides[cand.transposed ? 1 : 0], cand.c)) return;
    std::int64_t cur = first.load();
    while (i < cur && !first.compare_exchange_weak(cur, i)) {
    }
  };
  if (exec.is_serial()) {
    for (std::int64_t i = 0; i < total && first.load() == total; ++i) test(i);
  } else {
#pragma omp parallel for schedule(dynamic, 4) num_threads(exec.workers())
    for (std::int64_t i = 0; i < total; ++i) test(i);
  }

  ObstructionReport report;
  if (first.load() == total) return report;
  const Candidate& hit = candidates[static_cast<std::size_t>(first.load())];
  const std::vector<int> s = *forced_dependent(sides[hit.transposed ? 1 : 0], hit.c);
  ObstructionWitness w;
  w.dependent_rows = hit.transposed;
  w.columns = hit.transposed ? s : hit.c;
  w.rows = hit.transposed ? hit.c : s;
  report.verdict = Verdict::Infeasible;
  report.reason = ObstructionReason::ColumnDependence;
  report.witness = std::move(w);
  return report;
}

ObstructionReport trace_feasibility(const ZeroPattern& p, int n, long long t) {
  if (n != p.n()) throw InvalidArgument("trace_feasibility: order does not match the pattern");
  if (!p.is_symmetric()) throw InvalidArgument("trace_feasibility needs a symmetric pattern");
  ObstructionReport report;
  const long long abs_t = t < 0 ? -t : t;
  if (abs_t > n || (abs_t - n) % 2 != 0) {
    report.verdict = Verdict::Infeasible;
    report.reason = ObstructionReason::TraceParity;
    report.witness = ObstructionWitness{};
    return report;
  }
  if (abs_t == n - 2 && is_indecomposable(p)) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j || p(i, j)) continue;
        report.verdict = Verdict::Infeasible;
        report.reason = ObstructionReason::TraceNMinus2;
        report.witness = ObstructionWitness{{j}, {i}, false};
        return report;
      }
    }
  }
  return report;
}

}  // namespace orthopat
