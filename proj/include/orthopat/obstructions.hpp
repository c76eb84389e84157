// Certificates that no orthogonal (or unitary) matrix has a given support,
// optionally with a prescribed trace.
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "orthopat/pattern.hpp"

namespace orthopat {

/// Rectangular (0,1) grid; bit j of rows[i] is cell (i, j).
struct Grid {
  int cols = 0;
  std::vector<RowMask> rows;

  static Grid of(const ZeroPattern& p) { return {p.n(), p.rows()}; }
  /// Subgrid on the given row and column index lists, in that order.
  Grid sub(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
};

/// Largest r such that some r x r subgrid has exactly one perfect matching.
/// Every complex matrix with this support then has rank >= r.
int forced_rank_lower_bound(const Grid& g);
int forced_rank_lower_bound(const ZeroPattern& p);

/// Number of perfect matchings of a square grid, counting stops at `cap`.
long long count_perfect_matchings(const Grid& g, long long cap);

enum class Verdict { Infeasible, Unknown };
enum class ObstructionReason { None, ColumnDependence, TraceParity, TraceNMinus2 };

std::string_view verdict_name(Verdict v);
std::string_view reason_name(ObstructionReason r);

/// 0-based index sets. For column dependence, `dependent` names the side of
/// the forced-dependent set: columns C with row set S, or rows C with column
/// set S when found on the transpose. For trace-n-minus-2 the witness is one
/// off-diagonal zero cell.
struct ObstructionWitness {
  std::vector<int> columns;
  std::vector<int> rows;
  bool dependent_rows = false;
};

struct ObstructionReport {
  Verdict verdict = Verdict::Unknown;
  ObstructionReason reason = ObstructionReason::None;
  std::optional<ObstructionWitness> witness;

  bool infeasible() const noexcept { return verdict == Verdict::Infeasible; }
};

/// Columns C (|C| = 2 or 3) supported on rows S are forced dependent when
/// the rest of S has forced rank >= |S| - |C| + 1. Tried on P, then on P^T;
/// the first C by size, then lexicographic order, is reported.
ObstructionReport column_dependence_infeasible(const ZeroPattern& p, Execution exec = Execution::serial());

/// Parity and |t| = n - 2 obstructions for symmetric orthogonal matrices.
/// Throws InvalidArgument for non-symmetric P or n != P.n().
ObstructionReport trace_feasibility(const ZeroPattern& p, int n, long long t);

}  // namespace orthopat
