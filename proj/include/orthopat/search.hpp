// Exhaustive backtracking for integer matrices N with N N^T = d^2 I and a
// prescribed support, optionally symmetric with a prescribed trace.
#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "orthopat/linalg.hpp"
#include "orthopat/pattern.hpp"

namespace orthopat {

enum class SearchMode { FirstSolution, ProveMinimality, EnumerateAll };
enum class SearchStatus { Found, Exhausted, Obstructed, BudgetExceeded };
enum class RowOrder { DescendingSupport, AscendingSupport, Natural };

std::string_view mode_name(SearchMode m);
std::string_view status_name(SearchStatus s);
SearchMode parse_mode(std::string_view name);
RowOrder parse_row_order(std::string_view name);

struct SearchProgress {
  long long d;
  std::uint64_t nodes;      // at this d
  std::uint64_t solutions;  // at this d (normalized solutions)
};

struct SearchProblem {
  ZeroPattern pattern;
  bool symmetric = false;
  std::optional<long long> trace_target;
  long long denom_min = 1;
  long long denom_max = 1;
  bool require_indecomposable = false;
  SearchMode mode = SearchMode::FirstSolution;

  /// Total node budget over all d; 0 means unlimited.
  std::uint64_t node_budget = 0;
  RowOrder row_order = RowOrder::AscendingSupport;
  /// When false, skips obstruction tests and the trace admissibility check
  /// (used to cross-check those tests by plain search).
  bool use_obstructions = true;
  /// When false, rows are always filled entry by entry (cross-checks the
  /// exact tail solver).
  bool solve_tails = true;
  Execution exec = Execution::parallel();
  std::function<void(const SearchProgress&)> progress;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<RatMatrix> solution;
  std::optional<long long> denominator;
  std::uint64_t nodes_explored = 0;
  /// EnumerateAll: number of sign-normalized solutions over the scanned range.
  std::uint64_t solutions = 0;
  /// Last d searched exhaustively (0 if none).
  long long exhausted_through = 0;
  std::chrono::duration<double> elapsed{};
};

/// Every integer vector nonzero exactly on `support`, with squared norm d^2
/// and positive first nonzero entry, in ascending lexicographic order.
std::vector<std::vector<long long>> row_candidates(const std::vector<bool>& support, long long d);

/// Throws InvalidArgument for inconsistent constraints.
SearchResult solve(const SearchProblem& p);

/// solve() in ProveMinimality mode over d = 1..d_max.
SearchResult minimal_denominator(SearchProblem p, long long d_max);

}  // namespace orthopat
