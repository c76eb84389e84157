#include "orthopat/pattern.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "lambda_sharp_layout.hpp"
#include "zigzag_layout.hpp"

namespace orthopat {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder)
    throw InvalidArgument("pattern order must be in 1.." + std::to_string(kMaxOrder) + ", got " +
                          std::to_string(n));
}

RowMask low_bits(int n) { return n >= 64 ? ~RowMask{0} : (RowMask{1} << n) - 1; }

}  // namespace

ZeroPattern::ZeroPattern(int n) : n_(n) {
  check_order(n);
  rows_.assign(n, 0);
}

ZeroPattern::ZeroPattern(int n, std::vector<RowMask> rows) : n_(n), rows_(std::move(rows)) {
  check_order(n);
  if (static_cast<int>(rows_.size()) != n)
    throw InvalidArgument("pattern needs exactly n rows");
  for (RowMask r : rows_)
    if (r & ~low_bits(n)) throw InvalidArgument("pattern row has cells beyond column n");
}

ZeroPattern ZeroPattern::from_strings(const std::vector<std::string>& rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  ZeroPattern p(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError("pattern row " + std::to_string(i + 1) + " has length " +
                       std::to_string(rows[i].size()) + ", expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      const char ch = rows[i][j];
      if (ch != '0' && ch != '1')
        throw ParseError(std::string("pattern cell must be '0' or '1', got '") + ch + "'");
      if (ch == '1') p.set(i, j);
    }
  }
  return p;
}

ZeroPattern ZeroPattern::full(int n) {
  check_order(n);
  return ZeroPattern(n, std::vector<RowMask>(n, low_bits(n)));
}

ZeroPattern ZeroPattern::identity(int n) {
  ZeroPattern p(n);
  for (int i = 0; i < n; ++i) p.set(i, i);
  return p;
}

void ZeroPattern::set(int i, int j, bool value) {
  if (value)
    rows_[i] |= RowMask{1} << j;
  else
    rows_[i] &= ~(RowMask{1} << j);
}

RowMask ZeroPattern::column(int j) const noexcept {
  RowMask c = 0;
  for (int i = 0; i < n_; ++i)
    if ((rows_[i] >> j) & 1U) c |= RowMask{1} << i;
  return c;
}

int ZeroPattern::ones() const noexcept {
  int s = 0;
  for (RowMask r : rows_) s += std::popcount(r);
  return s;
}

int ZeroPattern::row_sum(int i) const noexcept { return std::popcount(rows_[i]); }
int ZeroPattern::column_sum(int j) const noexcept { return std::popcount(column(j)); }
RowMask ZeroPattern::all_columns() const noexcept { return low_bits(n_); }

ZeroPattern ZeroPattern::transpose() const {
  ZeroPattern t(n_);
  for (int j = 0; j < n_; ++j) t.rows_[j] = column(j);
  return t;
}

bool ZeroPattern::is_symmetric() const noexcept {
  for (int i = 0; i < n_; ++i)
    if (rows_[i] != column(i)) return false;
  return true;
}

std::string ZeroPattern::to_string() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(n_) * (n_ + 1));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) ? '1' : '0';
    s += '\n';
  }
  return s;
}

bool pattern_precedes(const ZeroPattern& a, const ZeroPattern& b) {
  if (a.n() != b.n()) return a.n() < b.n();
  for (int i = 0; i < a.n(); ++i) {
    const RowMask diff = a.row(i) ^ b.row(i);
    if (diff) return (a.row(i) >> std::countr_zero(diff)) & 1U;
  }
  return false;
}

PermPair PermPair::identity(int n) {
  PermPair pp;
  pp.row_perm.resize(n);
  std::iota(pp.row_perm.begin(), pp.row_perm.end(), 0);
  pp.col_perm = pp.row_perm;
  return pp;
}

bool is_permutation(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<int> inverse_permutation(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

// --- families -----------------------------------------------------------

namespace {

struct FamilyName {
  std::string_view name;
  PatternFamily family;
};

constexpr FamilyName kFamilyNames[] = {
    {"full", PatternFamily::Full},
    {"identity", PatternFamily::Identity},
    {"hollow", PatternFamily::Hollow},
    {"delta", PatternFamily::Delta},
    {"lambda", PatternFamily::Lambda},
    {"lambda_sharp", PatternFamily::LambdaSharp},
    {"hessenberg_sym", PatternFamily::HessenbergSym},
    {"hypercube", PatternFamily::Hypercube},
};

ZeroPattern lambda_sharp(int n) {
  if (n < 4 || n % 2 != 0)
    throw InvalidArgument("lambda_sharp needs an even order n >= 4, got " + std::to_string(n));
  ZeroPattern p = ZeroPattern::from_strings({"1111", "1111", "1110", "1100"});
  for (int m = 4; m < n; m += 2) {
    const detail::SharpStep step = detail::sharp_step(m);
    ZeroPattern q(m + 2);
    for (int u = 0; u < m; ++u) {
      for (int v = 0; v < m; ++v) {
        if (!p(u, v)) continue;
        const int nu = step.remap[u];
        const int nv = step.remap[v];
        if (nu >= 0 && nv >= 0) {
          q.set(nu, nv);
        } else if (nu >= 0) {
          q.set(nu, step.twin_a);
          q.set(nu, step.twin_b);
        } else if (nv >= 0) {
          q.set(step.twin_a, nv);
          q.set(step.twin_b, nv);
        }
      }
    }
    for (int t : {step.twin_a, step.twin_b}) {
      q.set(t, step.new_leaf);
      q.set(step.new_leaf, t);
    }
    p = q;
  }
  return p;
}

}  // namespace

PatternFamily parse_family(std::string_view name) {
  for (const auto& f : kFamilyNames)
    if (f.name == name) return f.family;
  throw InvalidArgument("unknown pattern family '" + std::string(name) + "'");
}

std::string_view family_name(PatternFamily family) {
  for (const auto& f : kFamilyNames)
    if (f.family == family) return f.name;
  return "?";
}

ZeroPattern pattern_family(PatternFamily family, int n, std::optional<int> k) {
  switch (family) {
    case PatternFamily::Full:
      return ZeroPattern::full(n);
    case PatternFamily::Identity:
      return ZeroPattern::identity(n);
    case PatternFamily::Hollow: {
      ZeroPattern p = ZeroPattern::full(n);
      for (int i = 0; i < n; ++i) p.set(i, i, false);
      return p;
    }
    case PatternFamily::Delta: {
      if (!k) throw InvalidArgument("delta family needs k");
      if (*k < 0 || *k > n)
        throw InvalidArgument("delta family needs 0 <= k <= n, got k=" + std::to_string(*k));
      ZeroPattern p = ZeroPattern::full(n);
      for (int i = 0; i < *k; ++i) p.set(i, i, false);
      return p;
    }
    case PatternFamily::Lambda: {
      ZeroPattern p(n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (detail::zigzag_term(n, r, c)) p.set(n - 1 - r, c);
      return p;
    }
    case PatternFamily::LambdaSharp:
      return lambda_sharp(n);
    case PatternFamily::HessenbergSym: {
      ZeroPattern p(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i + j >= n - 2) p.set(i, j);
      return p;
    }
    case PatternFamily::Hypercube: {
      if (n < 1 || n > 6)
        throw InvalidArgument("hypercube dimension must be in 1..6, got " + std::to_string(n));
      const int order = 1 << n;
      ZeroPattern p(order);
      for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
          if (std::popcount(static_cast<unsigned>(i ^ j)) == 1) p.set(i, j);
      return p;
    }
  }
  throw InvalidArgument("unknown pattern family");
}

// --- predicates ---------------------------------------------------------

namespace {

bool pairwise_not_one(const std::vector<RowMask>& rows) {
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b)
      if (std::popcount(rows[a] & rows[b]) == 1) return false;
  return true;
}

// Depth-first search for a row set R violating RSQ. c1/c2 are the columns met
// by at least one / at least two rows of R. |R'| = |c2| never shrinks as R
// grows, which bounds the search.
class RsqSearch {
 public:
  explicit RsqSearch(std::vector<RowMask> rows) : rows_(std::move(rows)) {}

  bool violated() {
    chosen_.clear();
    return dfs(0, 0, 0);
  }

 private:
  bool dfs(std::size_t next, RowMask c1, RowMask c2) {
    const int size = static_cast<int>(chosen_.size());
    const int shared = std::popcount(c2);
    if (size >= 2 && shared < size && shared > 0) {
      bool every_row_hits = true;
      for (RowMask r : chosen_)
        if (!(r & c2)) {
          every_row_hits = false;
          break;
        }
      if (every_row_hits) return true;
    }
    const int remaining = static_cast<int>(rows_.size() - next);
    if (shared >= size + remaining) return false;
    for (std::size_t i = next; i < rows_.size(); ++i) {
      const RowMask r = rows_[i];
      chosen_.push_back(r);
      const bool hit = dfs(i + 1, c1 | r, c2 | (c1 & r));
      chosen_.pop_back();
      if (hit) return true;
      if (shared >= size + static_cast<int>(rows_.size() - i - 1)) break;
    }
    return false;
  }

  std::vector<RowMask> rows_;
  std::vector<RowMask> chosen_;
};

bool decomposable_by_subsets(const ZeroPattern& p) {
  const int n = p.n();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<RowMask> unions(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < full; ++s) {
    const int low = std::countr_zero(s);
    unions[s] = unions[s & (s - 1)] | p.row(low);
    if (std::popcount(unions[s]) <= std::popcount(s)) return true;
  }
  return false;
}

// Kuhn's augmenting path matching on the rows/columns left after deleting
// one row and one column.
bool has_perfect_matching_without(const ZeroPattern& p, int skip_row, int skip_col) {
  const int n = p.n();
  std::vector<int> match_col(n, -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, int r) -> bool {
    RowMask cand = p.row(r);
    while (cand) {
      const int c = std::countr_zero(cand);
      cand &= cand - 1;
      if (c == skip_col || seen[c]) continue;
      seen[c] = 1;
      if (match_col[c] < 0 || self(self, match_col[c])) {
        match_col[c] = r;
        return true;
      }
    }
    return false;
  };
  for (int r = 0; r < n; ++r) {
    if (r == skip_row) continue;
    seen.assign(n, 0);
    if (!augment(augment, r)) return false;
  }
  return true;
}

}  // namespace

bool is_quadrangular(const ZeroPattern& p) {
  return pairwise_not_one(p.rows()) && pairwise_not_one(p.transpose().rows());
}

bool is_rsq(const ZeroPattern& p) {
  std::vector<RowMask> rows;
  for (RowMask r : p.rows())
    if (r) rows.push_back(r);  // a zero row can never meet R'
  return !RsqSearch(std::move(rows)).violated();
}

bool is_sq(const ZeroPattern& p) { return is_rsq(p) && is_rsq(p.transpose()); }

bool is_indecomposable(const ZeroPattern& p) {
  const int n = p.n();
  if (n == 1) return true;
  if (n <= 12) return !decomposable_by_subsets(p);
  // Fully indecomposable iff every (n-1)x(n-1) minor has a perfect matching.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!has_perfect_matching_without(p, i, j)) return false;
  return true;
}

ZeroPattern apply_perms(const ZeroPattern& p, const PermPair& pp) {
  const int n = p.n();
  if (static_cast<int>(pp.row_perm.size()) != n || static_cast<int>(pp.col_perm.size()) != n)
    throw InvalidArgument("permutation size does not match pattern order");
  if (!is_permutation(pp.row_perm) || !is_permutation(pp.col_perm))
    throw InvalidArgument("apply_perms needs bijections");
  ZeroPattern out(n);
  for (int i = 0; i < n; ++i) {
    RowMask r = p.row(i);
    while (r) {
      const int j = std::countr_zero(r);
      r &= r - 1;
      out.set(pp.row_perm[i], pp.col_perm[j]);
    }
  }
  return out;
}

ZeroPattern apply_congruence(const ZeroPattern& p, const std::vector<int>& perm) {
  return apply_perms(p, PermPair{perm, perm});
}

}  // namespace orthopat
