// Square (0,1) zero-patterns: predicates, canonical forms and the census of
// indecomposable strongly quadrangular classes.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthopat/error.hpp"
#include "orthopat/parallel.hpp"

namespace orthopat {

inline constexpr int kMaxOrder = 64;

using RowMask = std::uint64_t;

/// An n x n (0,1)-matrix. Row i is a bitmask with bit j set iff cell (i,j) is
/// nonzero. Orders 1..kMaxOrder.
class ZeroPattern {
 public:
  ZeroPattern() : ZeroPattern(1) {}
  explicit ZeroPattern(int n);
  ZeroPattern(int n, std::vector<RowMask> rows);

  /// Rows given as strings of '0'/'1'.
  static ZeroPattern from_strings(const std::vector<std::string>& rows);
  static ZeroPattern full(int n);
  static ZeroPattern identity(int n);

  int n() const noexcept { return n_; }
  bool operator()(int i, int j) const noexcept { return (rows_[i] >> j) & 1U; }
  void set(int i, int j, bool value = true);

  RowMask row(int i) const noexcept { return rows_[i]; }
  RowMask column(int j) const noexcept;
  const std::vector<RowMask>& rows() const noexcept { return rows_; }

  int ones() const noexcept;
  int row_sum(int i) const noexcept;
  int column_sum(int j) const noexcept;
  RowMask all_columns() const noexcept;

  ZeroPattern transpose() const;
  bool is_symmetric() const noexcept;

  std::string to_string() const;  // n lines of '0'/'1', newline-terminated

  bool operator==(const ZeroPattern&) const = default;

 private:
  int n_ = 1;
  std::vector<RowMask> rows_;
};

/// Fixed total order on patterns of equal order: row-major cells compared
/// lexicographically, a 1 precedes a 0. Returns true iff a comes before b.
bool pattern_precedes(const ZeroPattern& a, const ZeroPattern& b);

/// Row and column permutations, 0-based. Row r of the input moves to row
/// row_perm[r] of the output; likewise for columns.
struct PermPair {
  std::vector<int> row_perm;
  std::vector<int> col_perm;

  static PermPair identity(int n);
  bool operator==(const PermPair&) const = default;
};

bool is_permutation(const std::vector<int>& p);
std::vector<int> inverse_permutation(const std::vector<int>& p);

// --- named families -------------------------------------------------------

enum class PatternFamily {
  Full,           // J_n
  Identity,       // I_n
  Hollow,         // J_n - I_n
  Delta,          // J_n with the first k diagonal cells zero
  Lambda,         // row-reversed zigzag support
  LambdaSharp,    // symmetric maximal pattern, even n, 4n-3 ones
  HessenbergSym,  // antidiagonal permutation times the Hessenberg pattern
  Hypercube,      // adjacency of Q_n, order 2^n
};

PatternFamily parse_family(std::string_view name);
std::string_view family_name(PatternFamily family);

ZeroPattern pattern_family(PatternFamily family, int n, std::optional<int> k = std::nullopt);

// --- predicates ---------------------------------------------------------

bool is_quadrangular(const ZeroPattern& p);
bool is_rsq(const ZeroPattern& p);
bool is_sq(const ZeroPattern& p);
bool is_indecomposable(const ZeroPattern& p);

// --- permutations and canonical forms -----------------------------------

ZeroPattern apply_perms(const ZeroPattern& p, const PermPair& pp);

/// Simultaneous permutation: cell (perm[i], perm[j]) of the output equals cell
/// (i, j) of the input.
ZeroPattern apply_congruence(const ZeroPattern& p, const std::vector<int>& perm);

struct EquivalenceForm {
  ZeroPattern pattern;
  PermPair witness;  // apply_perms(input, witness) == pattern
};

struct CongruenceForm {
  ZeroPattern pattern;
  std::vector<int> witness;  // apply_congruence(input, witness) == pattern
};

/// First pattern under pattern_precedes among all row/column permutations.
EquivalenceForm canonical_equivalence(const ZeroPattern& p);

/// Canonical form when a pattern and its transpose are also identified: the
/// earlier of the equivalence forms of p and of transpose(p).
ZeroPattern canonical_class(const ZeroPattern& p);

/// First pattern under pattern_precedes among all simultaneous permutations.
/// Throws InvalidArgument for non-symmetric input.
CongruenceForm canonical_congruence(const ZeroPattern& p);

/// A symmetric pattern equivalent to p, if any. Only row permutations are
/// needed: if R p C is symmetric then so is C^T R p.
std::optional<ZeroPattern> symmetric_representative(const ZeroPattern& p);

// --- text format --------------------------------------------------------

/// Patterns as rows of '0'/'1' (spaces allowed between cells). Patterns are
/// separated by blank lines; lines starting with '#' are ignored.
std::vector<ZeroPattern> parse_patterns(std::string_view text);

/// Exactly one pattern; throws ParseError otherwise.
ZeroPattern parse_pattern(std::string_view text);

std::string format_patterns(const std::vector<ZeroPattern>& patterns);

// --- census -------------------------------------------------------------

inline constexpr int kMaxCensusOrder = 6;

/// One canonical_class representative per class of indecomposable SQ patterns
/// of order n, sorted by pattern_precedes. Classes identify row/column
/// permutations and transposition.
std::vector<ZeroPattern> enumerate_indecomposable_sq(int n, Execution exec = Execution::parallel());

}  // namespace orthopat
