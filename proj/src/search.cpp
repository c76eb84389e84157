#include "orthopat/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "orthopat/obstructions.hpp"

namespace orthopat {

using i64 = long long;
__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

namespace {

i64 isqrt(i64 v) {
  if (v <= 0) return 0;
  auto r = static_cast<i64>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// sums(m, r): r is a sum of exactly m positive squares.
class SquareSums {
 public:
  SquareSums(int max_terms, i64 max_value) : max_terms_(max_terms), max_value_(max_value) {
    table_.assign(max_terms + 1, std::vector<bool>(static_cast<std::size_t>(max_value + 1), false));
    table_[0][0] = true;
    if (max_terms >= 1)
      for (i64 v = 1; v * v <= max_value; ++v) table_[1][v * v] = true;
    if (max_terms >= 2)
      for (i64 a = 1; 2 * a * a <= max_value; ++a)
        for (i64 b = a; a * a + b * b <= max_value; ++b) table_[2][a * a + b * b] = true;
    for (int m = 3; m <= max_terms; ++m) {
      for (i64 r = m; r <= max_value; ++r) {
        for (i64 v = 1; v * v <= r - (m - 1); ++v) {
          if (table_[m - 1][r - v * v]) {
            table_[m][r] = true;
            break;
          }
        }
      }
    }
  }

  bool operator()(int m, i64 r) const {
    return r >= 0 && r <= max_value_ && m >= 0 && m <= max_terms_ && table_[m][r];
  }

 private:
  int max_terms_;
  i64 max_value_;
  std::vector<std::vector<bool>> table_;
};

// Problem data independent of d. Rows (plain) or vertices (symmetric) are
// renumbered so that they are processed in the order 0..n-1.
struct Layout {
  int n = 0;
  bool symmetric = false;
  std::vector<int> order;  // processing index -> original index
  ZeroPattern s;
  std::vector<std::vector<int>> free_cols;  // assigned while processing row i
  std::vector<RowMask> col_mask;            // bit r: s(r, j)
  std::vector<int> diag_after;              // sym: diagonal support among vertices > i
  int diag_total = 0;
  bool has_trace = false;
  bool solve_tails = true;
  i64 trace = 0;

  RowMask rows_after(int i) const {
    return i + 1 >= 64 ? 0 : ~((RowMask{1} << (i + 1)) - 1);
  }
  int line_count_after(int i, int j) const { return std::popcount(col_mask[j] & rows_after(i)); }
  bool line_open(int i, int j) const { return !symmetric || j > i; }
};

Layout make_layout(const SearchProblem& p) {
  Layout l;
  l.n = p.pattern.n();
  l.symmetric = p.symmetric;
  l.order.resize(l.n);
  std::iota(l.order.begin(), l.order.end(), 0);
  if (p.row_order != RowOrder::Natural) {
    const bool desc = p.row_order == RowOrder::DescendingSupport;
    std::stable_sort(l.order.begin(), l.order.end(), [&](int a, int b) {
      const int sa = p.pattern.row_sum(a);
      const int sb = p.pattern.row_sum(b);
      return desc ? sa > sb : sa < sb;
    });
  }
  const std::vector<int> pos = inverse_permutation(l.order);  // original -> processing
  if (l.symmetric) {
    l.s = apply_congruence(p.pattern, pos);
  } else {
    PermPair pp = PermPair::identity(l.n);
    pp.row_perm = pos;
    l.s = apply_perms(p.pattern, pp);
  }
  l.free_cols.resize(l.n);
  for (int i = 0; i < l.n; ++i)
    for (int j = l.symmetric ? i : 0; j < l.n; ++j)
      if (l.s(i, j)) l.free_cols[i].push_back(j);
  l.col_mask.assign(l.n, 0);
  for (int i = 0; i < l.n; ++i)
    for (int j = 0; j < l.n; ++j)
      if (l.s(i, j)) l.col_mask[j] |= RowMask{1} << i;
  l.diag_after.assign(l.n, 0);
  for (int i = l.n - 1; i >= 0; --i) {
    const int next = i + 1 < l.n ? l.diag_after[i + 1] + (l.s(i + 1, i + 1) ? 1 : 0) : 0;
    l.diag_after[i] = next;
  }
  for (int i = 0; i < l.n; ++i) l.diag_total += l.s(i, i) ? 1 : 0;
  l.has_trace = p.trace_target.has_value();
  l.solve_tails = p.solve_tails;
  l.trace = p.trace_target.value_or(0);
  return l;
}

struct Shared {
  std::atomic<std::int64_t> best_index;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budget_hit{false};
  std::uint64_t budget = 0;
};

// An earlier row overlapping the row being filled: pd is the dot product
// accumulated so far.
struct Partner {
  int row;
  i64 pd;
  std::vector<i64> weight_after;  // weight_after[q]: sum over free positions >= q of x(row, col)^2
};

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a))
    if (e & 1) r = mul_mod(r, a);
  return r;
}

// Rank modulo a prime; never exceeds the rank over the rationals.
int mod_rank(std::vector<std::vector<std::uint64_t>> m, std::size_t cols) {
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = pow_mod(m[rank][c], kPrime - 2);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const std::uint64_t f = mul_mod(m[r][c], inv);
      for (std::size_t k = c; k < cols; ++k)
        m[r][k] = (m[r][k] + kPrime - mul_mod(f, m[rank][k])) % kPrime;
    }
    ++rank;
  }
  return rank;
}

// Once the orthogonality constraints leave at most one degree of freedom in
// the unfilled positions of a row, those positions are solved for directly:
// a linear system, intersected with the norm sphere when one free variable
// remains.
struct Tail {
  std::size_t start = static_cast<std::size_t>(-1);
  std::size_t length = 0;
  int free_pos = -1;
  std::vector<int> pivot_pos;
  Int den;
  std::vector<std::vector<Int>> c;  // pivot rows x partners
  std::vector<Int> f;               // pivot rows
  std::vector<std::vector<Int>> g;  // consistency rows x partners

  static Tail build(const std::vector<Partner>& partners, const std::vector<int>& cols, const std::vector<i64>& x,
                    int n) {
    Tail t;
    const std::size_t p = partners.size();
    const std::size_t m = cols.size();
    if (p == 0) return t;
    auto value = [&](std::size_t k, std::size_t pos) { return x[static_cast<std::size_t>(partners[k].row) * n + cols[pos]]; };
    std::size_t start = m;
    for (std::size_t q = 0; q < m; ++q) {
      const std::size_t len = m - q;
      std::vector<std::vector<std::uint64_t>> mm(p, std::vector<std::uint64_t>(len));
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < len; ++l) {
          const i64 v = value(k, q + l);
          mm[k][l] = v >= 0 ? static_cast<std::uint64_t>(v) : kPrime - static_cast<std::uint64_t>(-v);
        }
      const int r = mod_rank(std::move(mm), len);
      if (r >= 1 && len - static_cast<std::size_t>(r) <= 1) {
        start = q;
        break;
      }
    }
    if (start == m) return t;

    const std::size_t len = m - start;
    std::vector<std::vector<Rat>> a(p, std::vector<Rat>(len + p));
    for (std::size_t k = 0; k < p; ++k) {
      for (std::size_t l = 0; l < len; ++l) a[k][l] = static_cast<long>(value(k, start + l));
      a[k][len + k] = 1;
    }
    std::size_t rank = 0;
    std::vector<int> pivots;
    for (std::size_t col = 0; col < len && rank < p; ++col) {
      std::size_t piv = rank;
      while (piv < p && a[piv][col] == 0) ++piv;
      if (piv == p) continue;
      std::swap(a[piv], a[rank]);
      const Rat lead = a[rank][col];
      for (Rat& e : a[rank]) e /= lead;
      for (std::size_t r = 0; r < p; ++r) {
        if (r == rank || a[r][col] == 0) continue;
        const Rat factor = a[r][col];
        for (std::size_t k = 0; k < len + p; ++k) a[r][k] -= factor * a[rank][k];
      }
      pivots.push_back(static_cast<int>(col));
      ++rank;
    }
    if (len - rank > 1) return t;  // the modular rank undercounted; stay with plain enumeration

    t.start = start;
    t.length = len;
    t.pivot_pos = pivots;
    for (std::size_t l = 0; l < len; ++l)
      if (std::find(pivots.begin(), pivots.end(), static_cast<int>(l)) == pivots.end()) t.free_pos = static_cast<int>(l);
    Int den = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      for (std::size_t k = 0; k < p; ++k) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a[r][len + k].get_den_mpz_t());
      if (t.free_pos >= 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a[r][t.free_pos].get_den_mpz_t());
    }
    t.den = den;
    for (std::size_t r = 0; r < rank; ++r) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < p; ++k) row.push_back(Int(a[r][len + k] * den));
      t.c.push_back(std::move(row));
      t.f.push_back(t.free_pos >= 0 ? Int(a[r][t.free_pos] * den) : Int(0));
    }
    for (std::size_t r = rank; r < p; ++r) {
      Int scale = 1;
      for (std::size_t k = 0; k < p; ++k) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a[r][len + k].get_den_mpz_t());
      std::vector<Int> row;
      for (std::size_t k = 0; k < p; ++k) row.push_back(Int(a[r][len + k] * scale));
      t.g.push_back(std::move(row));
    }
    return t;
  }

  // Integer completions with squared norm rem, ascending in the free value.
  std::vector<std::vector<i64>> solve(const std::vector<Partner>& partners, i64 rem) const {
    std::vector<std::vector<i64>> out;
    std::vector<Int> b;
    for (const Partner& p : partners) b.emplace_back(static_cast<long>(-p.pd));
    Int acc;
    for (const auto& row : g) {
      acc = 0;
      for (std::size_t k = 0; k < b.size(); ++k) acc += row[k] * b[k];
      if (acc != 0) return out;
    }
    std::vector<Int> cb(c.size());
    for (std::size_t r = 0; r < c.size(); ++r) {
      cb[r] = 0;
      for (std::size_t k = 0; k < b.size(); ++k) cb[r] += c[r][k] * b[k];
    }
    auto complete = [&](const Int& t) {
      std::vector<i64> y(length, 0);
      if (free_pos >= 0) y[free_pos] = t.get_si();
      Int v;
      for (std::size_t r = 0; r < c.size(); ++r) {
        v = cb[r] - f[r] * t;
        if (!mpz_divisible_p(v.get_mpz_t(), den.get_mpz_t())) return;
        v /= den;
        if (!v.fits_slong_p()) return;
        y[pivot_pos[r]] = v.get_si();
      }
      i64 norm = 0;
      for (i64 e : y) norm += e * e;
      if (norm == rem) out.push_back(std::move(y));
    };
    if (free_pos < 0) {
      complete(Int(0));
      return out;
    }
    Int a2 = den * den;
    Int b1 = 0;
    Int c0 = -Int(static_cast<long>(rem)) * den * den;
    for (std::size_t r = 0; r < c.size(); ++r) {
      a2 += f[r] * f[r];
      b1 += cb[r] * f[r];
      c0 += cb[r] * cb[r];
    }
    const Int disc = b1 * b1 - a2 * c0;
    if (disc < 0) return out;
    Int root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    if (root * root != disc) return out;
    for (int sign : {-1, 1}) {
      if (sign == 1 && root == 0) break;
      const Int num = sign < 0 ? Int(b1 - root) : Int(b1 + root);
      if (!mpz_divisible_p(num.get_mpz_t(), a2.get_mpz_t())) continue;
      const Int t = num / a2;
      if (t == 0 || !t.fits_slong_p()) continue;
      complete(t);
    }
    return out;
  }
};

// One depth-first walker; not shared between threads.
class Walker {
 public:
  Walker(const Layout& l, const SquareSums& sums, i64 d, bool enumerate, Shared& shared)
      : l_(l), sums_(sums), d_(d), d2_(d * d), enumerate_(enumerate), shared_(shared), n_(l.n) {
    x_.assign(static_cast<std::size_t>(n_) * n_, 0);
    line_rem_.assign(n_, d2_);
    line_dot_.assign(static_cast<std::size_t>(n_) * n_, 0);
  }

  // Complete first rows in ascending order.
  std::vector<std::vector<i64>> first_rows() {
    collecting_ = true;
    collected_.clear();
    solve_row(0);
    flush_nodes();
    collecting_ = false;
    return std::move(collected_);
  }

  // Searches below a fixed first row; returns solutions found (stops at one
  // unless enumerating).
  std::uint64_t run_from(const std::vector<i64>& first, std::int64_t index) {
    index_ = index;
    solutions_ = 0;
    stopped_ = false;
    const auto& cols = l_.free_cols[0];
    for (std::size_t q = 0; q < cols.size(); ++q) assign(0, cols[q], first[q]);
    if (row_done(0)) solve_row(1);
    undo_row_done(0);
    for (std::size_t q = 0; q < cols.size(); ++q) unassign(0, cols[q]);
    flush_nodes();
    return solutions_;
  }

  const std::vector<i64>& solution() const { return solution_; }
  std::uint64_t local_nodes() const { return total_nodes_; }

 private:
  i64& at(int i, int j) { return x_[static_cast<std::size_t>(i) * n_ + j]; }
  i64 at(int i, int j) const { return x_[static_cast<std::size_t>(i) * n_ + j]; }
  i64& dot(int a, int b) { return line_dot_[static_cast<std::size_t>(a) * n_ + b]; }

  void assign(int i, int j, i64 v) {
    at(i, j) = v;
    if (l_.symmetric) at(j, i) = v;
    if (!(l_.symmetric && j == i)) line_rem_[j] -= v * v;
    if (l_.symmetric && j == i) diag_sum_ += v;
  }

  void unassign(int i, int j) {
    const i64 v = at(i, j);
    if (!(l_.symmetric && j == i)) line_rem_[j] += v * v;
    if (l_.symmetric && j == i) diag_sum_ -= v;
    at(i, j) = 0;
    if (l_.symmetric) at(j, i) = 0;
  }

  bool tick() {
    ++pending_nodes_;
    if (pending_nodes_ >= 4096) flush_nodes();
    if (stopped_) return false;
    return true;
  }

  void flush_nodes() {
    total_nodes_ += pending_nodes_;
    const std::uint64_t total = shared_.nodes.fetch_add(pending_nodes_) + pending_nodes_;
    pending_nodes_ = 0;
    if (shared_.budget && total > shared_.budget) shared_.budget_hit = true;
    if (shared_.budget_hit.load(std::memory_order_relaxed)) stopped_ = true;
    if (!enumerate_ && !collecting_ && shared_.best_index.load(std::memory_order_relaxed) < index_)
      stopped_ = true;
  }

  void solve_row(int i) {
    if (stopped_) return;
    if (i == n_) {
      record_solution();
      return;
    }
    const auto& cols = l_.free_cols[i];
    const i64 rem = l_.symmetric ? line_rem_[i] : d2_;
    if (!sums_(static_cast<int>(cols.size()), rem)) return;

    std::vector<Partner> partners;
    for (int k = 0; k < i; ++k) {
      i64 pd = 0;
      if (l_.symmetric)
        for (int j = 0; j < i; ++j) pd += at(k, j) * at(i, j);
      std::vector<i64> w(cols.size() + 1, 0);
      for (std::size_t q = cols.size(); q-- > 0;) w[q] = w[q + 1] + at(k, cols[q]) * at(k, cols[q]);
      if (w[0] == 0) {
        if (pd != 0) return;
        continue;
      }
      partners.push_back({k, pd, std::move(w)});
    }
    const Tail tail = l_.solve_tails ? Tail::build(partners, cols, x_, n_) : Tail{};
    entry(i, 0, rem, partners, tail);
  }

  bool positive_only(int i, std::size_t q) const {
    if (i == 0) return l_.symmetric ? l_.free_cols[0][q] != 0 : true;
    return !l_.symmetric && q == 0;
  }

  // Value v at position q of row i, leaving squared norm r2 for the rest.
  bool admissible(int i, std::size_t q, i64 v, i64 r2, const std::vector<Partner>& partners) const {
    const auto& cols = l_.free_cols[i];
    const int j = cols[q];
    const int left = static_cast<int>(cols.size() - q - 1);
    if (!sums_(left, r2)) return false;
    const bool diag = l_.symmetric && j == i;
    if (!diag && !sums_(l_.line_count_after(i, j), line_rem_[j] - v * v)) return false;
    if (diag && l_.has_trace) {
      const i64 gap = l_.trace * d_ - (diag_sum_ + v);
      const i64 room = static_cast<i64>(l_.diag_after[i]) * d_;
      if (gap > room || -gap > room) return false;
      if (l_.diag_after[i] == 0 && gap != 0) return false;
    }
    for (const Partner& p : partners) {
      const i64 pd = p.pd + at(p.row, j) * v;
      const i64 w = p.weight_after[q + 1];
      if (w == 0 ? pd != 0 : static_cast<i128>(pd) * pd > static_cast<i128>(r2) * w) return false;
    }
    return true;
  }

  void entry(int i, std::size_t q, i64 rem, std::vector<Partner>& partners, const Tail& tail) {
    const auto& cols = l_.free_cols[i];
    if (q == cols.size()) {
      if (collecting_ && i == 0) {
        std::vector<i64> row;
        for (int j : cols) row.push_back(at(0, j));
        collected_.push_back(std::move(row));
        return;
      }
      if (row_done(i)) solve_row(i + 1);
      undo_row_done(i);
      return;
    }
    if (q == tail.start) {
      for (const std::vector<i64>& y : tail.solve(partners, rem)) {
        place(i, q, rem, partners, tail, y, 0);
        if (stopped_) return;
      }
      return;
    }
    const int j = cols[q];
    const int left = static_cast<int>(cols.size() - q - 1);
    if (left == 0) {
      const i64 root = isqrt(rem);
      if (root * root != rem || root == 0) return;
      const std::vector<i64> lone = positive_only(i, q) ? std::vector<i64>{root} : std::vector<i64>{-root, root};
      for (i64 v : lone) {
        place(i, q, rem, partners, tail, {v}, 0);
        if (stopped_) return;
      }
      return;
    }
    const i64 vmax = isqrt(rem - left);
    for (i64 v = positive_only(i, q) ? 1 : -vmax; v <= vmax; ++v) {
      if (v == 0) continue;
      const i64 r2 = rem - v * v;
      if (!admissible(i, q, v, r2, partners)) continue;
      if (!tick()) return;
      for (Partner& p : partners) p.pd += at(p.row, j) * v;
      assign(i, j, v);
      entry(i, q + 1, r2, partners, tail);
      unassign(i, j);
      for (Partner& p : partners) p.pd -= at(p.row, j) * v;
      if (stopped_) return;
    }
  }

  // Assigns the values y to positions q, q+1, ... of row i with the usual
  // checks, then completes the row.
  void place(int i, std::size_t q, i64 rem, std::vector<Partner>& partners, const Tail& tail,
             const std::vector<i64>& y, std::size_t k) {
    if (k == y.size()) {
      entry(i, l_.free_cols[i].size(), rem, partners, tail);
      return;
    }
    const i64 v = y[k];
    const i64 r2 = rem - v * v;
    if (v == 0 || (v < 0 && positive_only(i, q + k))) return;
    if (!admissible(i, q + k, v, r2, partners)) return;
    if (!tick()) return;
    const int j = l_.free_cols[i][q + k];
    for (Partner& p : partners) p.pd += at(p.row, j) * v;
    assign(i, j, v);
    place(i, q, r2, partners, tail, y, k + 1);
    unassign(i, j);
    for (Partner& p : partners) p.pd -= at(p.row, j) * v;
  }

  // Folds row i into the column-pair dots and checks the pair bounds.
  bool row_done(int i) {
    const auto& cols = l_.free_cols[i];
    const RowMask after = l_.rows_after(i);
    for (std::size_t a = 0; a < cols.size(); ++a)
      for (std::size_t b = a + 1; b < cols.size(); ++b) dot(cols[a], cols[b]) += at(i, cols[a]) * at(i, cols[b]);
    for (int a : cols) {
      if (!l_.line_open(i, a)) continue;
      for (int b = 0; b < n_; ++b) {
        if (b == a || !l_.line_open(i, b)) continue;
        if (l_.s(i, b) && b < a) continue;  // pair already visited from b
        const i64 dab = a < b ? dot(a, b) : dot(b, a);
        const bool shared = (l_.col_mask[a] & l_.col_mask[b] & after) != 0;
        if (!shared) {
          if (dab != 0) return false;
        } else if (static_cast<i128>(dab) * dab > static_cast<i128>(line_rem_[a]) * line_rem_[b]) {
          return false;
        }
      }
    }
    return true;
  }

  void undo_row_done(int i) {
    const auto& cols = l_.free_cols[i];
    for (std::size_t a = 0; a < cols.size(); ++a)
      for (std::size_t b = a + 1; b < cols.size(); ++b) dot(cols[a], cols[b]) -= at(i, cols[a]) * at(i, cols[b]);
  }

  void record_solution() {
    ++solutions_;
    if (solutions_ == 1) solution_ = x_;
    if (!enumerate_) {
      stopped_ = true;
      std::int64_t cur = shared_.best_index.load();
      while (index_ < cur && !shared_.best_index.compare_exchange_weak(cur, index_)) {
      }
    }
  }

  const Layout& l_;
  const SquareSums& sums_;
  i64 d_;
  i64 d2_;
  bool enumerate_;
  Shared& shared_;
  int n_;
  std::vector<i64> x_;
  std::vector<i64> line_rem_;
  std::vector<i64> line_dot_;
  i64 diag_sum_ = 0;

  bool collecting_ = false;
  std::vector<std::vector<i64>> collected_;
  std::int64_t index_ = 0;
  bool stopped_ = false;
  std::uint64_t solutions_ = 0;
  std::vector<i64> solution_;
  std::uint64_t pending_nodes_ = 0;
  std::uint64_t total_nodes_ = 0;
};

struct LevelOutcome {
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
  bool budget_hit = false;
  std::vector<i64> solution;  // processing-order grid, empty if none
};

LevelOutcome search_level(const Layout& l, const SquareSums& sums, i64 d, const SearchProblem& p,
                          std::uint64_t budget_left) {
  const bool enumerate = p.mode == SearchMode::EnumerateAll;
  Shared shared;
  shared.budget = budget_left;
  LevelOutcome out;
  if (l.symmetric && l.has_trace && l.trace != 0 && l.diag_total == 0) return out;

  Walker root(l, sums, d, enumerate, shared);
  shared.best_index = std::numeric_limits<std::int64_t>::max();
  const std::vector<std::vector<i64>> firsts = root.first_rows();
  out.nodes = root.local_nodes();
  const auto count = static_cast<std::int64_t>(firsts.size());
  shared.best_index = count;

  std::vector<std::uint64_t> found(firsts.size(), 0);
  std::vector<std::vector<i64>> grids(firsts.size());
  auto run_one = [&](Walker& w, std::int64_t idx) {
    if (shared.budget_hit.load()) return;
    if (!enumerate && shared.best_index.load() < idx) return;
    const std::uint64_t k = w.run_from(firsts[static_cast<std::size_t>(idx)], idx);
    found[static_cast<std::size_t>(idx)] = k;
    if (k) grids[static_cast<std::size_t>(idx)] = w.solution();
  };
  std::atomic<std::uint64_t> walker_nodes{0};
  if (p.exec.is_serial()) {
    Walker w(l, sums, d, enumerate, shared);
    for (std::int64_t idx = 0; idx < count; ++idx) {
      run_one(w, idx);
      if (!enumerate && found[static_cast<std::size_t>(idx)]) break;
      if (shared.budget_hit) break;
    }
    walker_nodes += w.local_nodes();
  } else {
#pragma omp parallel num_threads(p.exec.workers())
    {
      Walker w(l, sums, d, enumerate, shared);
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t idx = 0; idx < count; ++idx) run_one(w, idx);
      walker_nodes += w.local_nodes();
    }
  }
  out.nodes += walker_nodes.load();
  out.budget_hit = shared.budget_hit.load();
  for (std::size_t idx = 0; idx < firsts.size(); ++idx) {
    out.solutions += found[idx];
    if (found[idx] && out.solution.empty()) out.solution = grids[idx];
  }
  if (!enumerate && out.solutions) out.solutions = 1;
  return out;
}

RatMatrix to_matrix(const Layout& l, const std::vector<i64>& grid, i64 d) {
  const int n = l.n;
  std::vector<Int> num(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int oi = l.order[i];
      const int oj = l.symmetric ? l.order[j] : j;
      num[static_cast<std::size_t>(oi) * n + oj] = Int(static_cast<long>(grid[static_cast<std::size_t>(i) * n + j]));
    }
  }
  return RatMatrix(n, Int(static_cast<long>(d)), std::move(num));
}

void check_solution(const SearchProblem& p, const RatMatrix& x) {
  bool ok = is_orthogonal(x) && support(x) == p.pattern;
  if (p.symmetric) ok = ok && is_symmetric(x);
  if (p.trace_target) ok = ok && trace(x) == Rat(static_cast<long>(*p.trace_target));
  if (!ok) throw Error("internal error: search produced an invalid solution");
}

void validate(const SearchProblem& p) {
  if (p.denom_min < 1 || p.denom_max < p.denom_min) throw InvalidArgument("need 1 <= denom_min <= denom_max");
  if (p.denom_max > 2000) throw InvalidArgument("denom_max must be at most 2000");
  if (p.trace_target && !p.symmetric) throw InvalidArgument("a trace target needs symmetric mode");
  if (p.symmetric && !p.pattern.is_symmetric()) throw InvalidArgument("symmetric mode needs a symmetric pattern");
  if (p.require_indecomposable && !is_indecomposable(p.pattern))
    throw InvalidArgument("pattern is decomposable but indecomposability was required");
  if (p.trace_target && p.use_obstructions) {
    const i64 t = *p.trace_target;
    const i64 n = p.pattern.n();
    if (t > n || -t > n || (t - n) % 2 != 0)
      throw InvalidArgument("trace target must satisfy |t| <= n and t = n mod 2");
  }
}

}  // namespace

std::string_view mode_name(SearchMode m) {
  switch (m) {
    case SearchMode::FirstSolution: return "first-solution";
    case SearchMode::ProveMinimality: return "prove-minimality";
    case SearchMode::EnumerateAll: return "enumerate-all";
  }
  return "?";
}

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::Obstructed: return "obstructed";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

SearchMode parse_mode(std::string_view name) {
  for (SearchMode m : {SearchMode::FirstSolution, SearchMode::ProveMinimality, SearchMode::EnumerateAll})
    if (mode_name(m) == name) return m;
  throw InvalidArgument("unknown search mode: " + std::string(name));
}

RowOrder parse_row_order(std::string_view name) {
  if (name == "descending") return RowOrder::DescendingSupport;
  if (name == "ascending") return RowOrder::AscendingSupport;
  if (name == "natural") return RowOrder::Natural;
  throw InvalidArgument("unknown row order: " + std::string(name));
}

std::vector<std::vector<long long>> row_candidates(const std::vector<bool>& support, long long d) {
  if (d < 1) throw InvalidArgument("row_candidates needs d >= 1");
  std::vector<int> cols;
  for (std::size_t j = 0; j < support.size(); ++j)
    if (support[j]) cols.push_back(static_cast<int>(j));
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(support.size(), 0);
  auto rec = [&](auto&& self, std::size_t q, i64 rem) -> void {
    if (q == cols.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    const i64 left = static_cast<i64>(cols.size() - q - 1);
    const i64 vmax = isqrt(rem - left);
    for (i64 v = q == 0 ? 1 : -vmax; v <= vmax; ++v) {
      if (v == 0) continue;
      cur[cols[q]] = v;
      self(self, q + 1, rem - v * v);
    }
    cur[cols[q]] = 0;
  };
  if (!cols.empty()) rec(rec, 0, d * d);
  return out;
}

SearchResult solve(const SearchProblem& p) {
  validate(p);
  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  auto finish = [&](SearchResult r) {
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
  };

  if (p.use_obstructions) {
    bool blocked = column_dependence_infeasible(p.pattern).infeasible();
    if (!blocked && p.symmetric && p.trace_target)
      blocked = trace_feasibility(p.pattern, p.pattern.n(), *p.trace_target).infeasible();
    if (blocked) {
      result.status = SearchStatus::Obstructed;
      return finish(result);
    }
  }

  const Layout layout = make_layout(p);
  const i64 d_first = p.mode == SearchMode::ProveMinimality ? 1 : p.denom_min;
  const SquareSums sums(layout.n, p.denom_max * p.denom_max);

  for (i64 d = d_first; d <= p.denom_max; ++d) {
    std::uint64_t budget_left = 0;
    if (p.node_budget) {
      if (result.nodes_explored >= p.node_budget) {
        result.status = SearchStatus::BudgetExceeded;
        return finish(result);
      }
      budget_left = p.node_budget - result.nodes_explored;
    }
    LevelOutcome level = search_level(layout, sums, d, p, budget_left);
    result.nodes_explored += level.nodes;
    if (p.progress) p.progress({d, level.nodes, level.solutions});
    if (level.budget_hit) {
      result.status = SearchStatus::BudgetExceeded;
      return finish(result);
    }
    result.solutions += level.solutions;
    if (!level.solution.empty() && !result.solution) {
      RatMatrix x = to_matrix(layout, level.solution, d);
      check_solution(p, x);
      result.solution = std::move(x);
      result.denominator = d;
    }
    if (result.solution && p.mode != SearchMode::EnumerateAll) {
      result.status = SearchStatus::Found;
      return finish(result);
    }
    result.exhausted_through = d;
  }
  result.status = result.solution ? SearchStatus::Found : SearchStatus::Exhausted;
  return finish(result);
}

SearchResult minimal_denominator(SearchProblem p, long long d_max) {
  if (d_max < 1) throw InvalidArgument("d_max must be positive");
  p.mode = SearchMode::ProveMinimality;
  p.denom_min = 1;
  p.denom_max = d_max;
  return solve(p);
}

}  // namespace orthopat
