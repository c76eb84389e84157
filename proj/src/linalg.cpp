#include "orthopat/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orthopat {

namespace {

void check_dims(const RatMatrix& a, const RatMatrix& b, const char* what) {
  if (a.n() != b.n()) throw InvalidArgument(std::string(what) + ": order mismatch");
}

// Integer n x n product of numerator grids.
std::vector<Int> int_product(int n, const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(static_cast<std::size_t>(n) * n);
  Int acc;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      acc = 0;
      for (int k = 0; k < n; ++k) acc += a[static_cast<std::size_t>(i) * n + k] * b[static_cast<std::size_t>(k) * n + j];
      out[static_cast<std::size_t>(i) * n + j] = acc;
    }
  }
  return out;
}

// N * N^T == s * I
bool gram_is_scalar(const RatMatrix& x, const Int& s, bool transpose_second) {
  const int n = x.n();
  Int acc;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      acc = 0;
      for (int k = 0; k < n; ++k)
        acc += transpose_second ? x.num(i, k) * x.num(j, k) : x.num(i, k) * x.num(k, j);
      if (acc != (i == j ? s : Int(0))) return false;
      if (!transpose_second && i != j) {
        acc = 0;
        for (int k = 0; k < n; ++k) acc += x.num(j, k) * x.num(k, i);
        if (acc != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

RatMatrix::RatMatrix(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("matrix order must be positive");
  num_.assign(static_cast<std::size_t>(n) * n, Int(0));
}

RatMatrix::RatMatrix(int n, Int den, std::vector<Int> num) : n_(n), den_(std::move(den)), num_(std::move(num)) {
  if (n < 1) throw InvalidArgument("matrix order must be positive");
  if (num_.size() != static_cast<std::size_t>(n) * n) throw InvalidArgument("matrix needs n*n numerators");
  if (den_ == 0) throw InvalidArgument("zero denominator");
  normalize();
}

void RatMatrix::normalize() {
  Int g = abs(den_);
  for (const Int& v : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (den_ < 0) g = -g;
  if (g != 1) {
    den_ /= g;
    for (Int& v : num_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m.num_[static_cast<std::size_t>(i) * n + i] = 1;
  return m;
}

RatMatrix RatMatrix::from_entries(int n, const std::vector<Rat>& entries) {
  if (entries.size() != static_cast<std::size_t>(n) * n) throw InvalidArgument("matrix needs n*n entries");
  Int den = 1;
  for (const Rat& e : entries) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.get_den_mpz_t());
  std::vector<Int> num;
  num.reserve(entries.size());
  for (const Rat& e : entries) num.push_back(e.get_num() * (den / e.get_den()));
  return RatMatrix(n, den, std::move(num));
}

RatMatrix RatMatrix::from_integers(int n, long den, const std::vector<long>& num) {
  std::vector<Int> big(num.begin(), num.end());
  return RatMatrix(n, Int(den), std::move(big));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(n_);
  t.den_ = den_;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.num_[static_cast<std::size_t>(j) * n_ + i] = num(i, j);
  return t;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix m = *this;
  for (Int& v : m.num_) v = -v;
  return m;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  std::vector<Int> num = num_;
  for (Int& v : num) v *= c.get_num();
  return RatMatrix(n_, den_ * c.get_den(), std::move(num));
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  check_dims(a, b, "matrix sum");
  std::vector<Int> num(a.num_.size());
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
  return RatMatrix(a.n_, a.den_ * b.den_, std::move(num));
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return a + (-b); }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  check_dims(a, b, "matrix product");
  return RatMatrix(a.n_, a.den_ * b.den_, int_product(a.n_, a.num_, b.num_));
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
}

std::string RatMatrix::to_string() const {
  std::vector<std::string> cells;
  cells.reserve(num_.size());
  std::size_t width = 0;
  for (const Int& v : num_) {
    cells.push_back(v.get_str());
    width = std::max(width, cells.back().size());
  }
  std::string out = "1/" + den_.get_str() + "\n";
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const std::string& c = cells[static_cast<std::size_t>(i) * n_ + j];
      if (j) out += ' ';
      out.append(width - c.size(), ' ');
      out += c;
    }
    out += '\n';
  }
  return out;
}

SkewRatMatrix::SkewRatMatrix(RatMatrix m) : m_(std::move(m)) {
  for (int i = 0; i < m_.n(); ++i)
    for (int j = i; j < m_.n(); ++j)
      if (m_.num(i, j) != -m_.num(j, i)) throw InvalidArgument("matrix is not skew-symmetric");
}

RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b) {
  const int n = a.n() + b.n();
  std::vector<Int> num(static_cast<std::size_t>(n) * n, Int(0));
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) num[static_cast<std::size_t>(i) * n + j] = a.num(i, j) * b.den();
  for (int i = 0; i < b.n(); ++i)
    for (int j = 0; j < b.n(); ++j)
      num[static_cast<std::size_t>(i + a.n()) * n + j + a.n()] = b.num(i, j) * a.den();
  return RatMatrix(n, a.den() * b.den(), std::move(num));
}

ZeroPattern support(const RatMatrix& x) {
  ZeroPattern p(x.n());
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j)
      if (x.num(i, j) != 0) p.set(i, j);
  return p;
}

bool is_orthogonal(const RatMatrix& x) { return gram_is_scalar(x, x.den() * x.den(), true); }

bool is_symmetric(const RatMatrix& x) {
  for (int i = 0; i < x.n(); ++i)
    for (int j = i + 1; j < x.n(); ++j)
      if (x.num(i, j) != x.num(j, i)) return false;
  return true;
}

bool is_involutory(const RatMatrix& x) { return gram_is_scalar(x, x.den() * x.den(), false); }

Rat trace(const RatMatrix& x) {
  Int sum = 0;
  for (int i = 0; i < x.n(); ++i) sum += x.num(i, i);
  return make_rat(sum, x.den());
}

namespace {

// Fraction-free elimination on the augmented rows [A | B] (width n + m).
// Returns the determinant of A (0 if singular); rows are left upper
// triangular in the first n columns.
Int bareiss(int n, int width, std::vector<std::vector<Int>>& rows) {
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (pivot < n && rows[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(rows[pivot], rows[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < width; ++j) {
        Int v = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        rows[i][j] = std::move(v);
      }
      rows[i][k] = 0;
    }
    prev = rows[k][k];
  }
  return sign > 0 ? prev : Int(-prev);
}

std::vector<std::vector<Int>> rows_of(const RatMatrix& a, int extra) {
  const int n = a.n();
  std::vector<std::vector<Int>> rows(n, std::vector<Int>(n + extra, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = a.num(i, j);
  return rows;
}

}  // namespace

Rat determinant(const RatMatrix& x) {
  auto rows = rows_of(x, 0);
  const Int det = bareiss(x.n(), x.n(), rows);
  Int den_power;
  mpz_pow_ui(den_power.get_mpz_t(), x.den().get_mpz_t(), static_cast<unsigned long>(x.n()));
  return make_rat(det, den_power);
}

RatMatrix solve_exact(const RatMatrix& a, const RatMatrix& b) {
  check_dims(a, b, "solve_exact");
  const int n = a.n();
  auto rows = rows_of(a, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][n + j] = b.num(i, j);
  const Int det = bareiss(n, 2 * n, rows);
  if (det == 0) throw SingularMatrixError("singular matrix in solve_exact");
  // Pivot of the last row equals +-det; use it directly so row swaps cancel.
  const Int& last = rows[n - 1][n - 1];

  std::vector<Int> z(static_cast<std::size_t>(n) * n);
  Int acc;
  for (int c = 0; c < n; ++c) {
    for (int i = n - 1; i >= 0; --i) {
      acc = last * rows[i][n + c];
      for (int j = i + 1; j < n; ++j) acc -= rows[i][j] * z[static_cast<std::size_t>(j) * n + c];
      mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), rows[i][i].get_mpz_t());
      z[static_cast<std::size_t>(i) * n + c] = acc;
    }
  }
  // N_A Y = N_B with Y = Z / last, and X = Y * d_A / d_B.
  for (Int& v : z) v *= a.den();
  return RatMatrix(n, last * b.den(), std::move(z));
}

RatMatrix cayley(const SkewRatMatrix& s) {
  const RatMatrix id = RatMatrix::identity(s.n());
  try {
    return solve_exact(id - s.matrix(), id + s.matrix());
  } catch (const SingularMatrixError&) {
    throw Error("internal error: I - S singular for a skew-symmetric rational S");
  }
}

RatMatrix conjugate(const RatMatrix& x, const RatMatrix& p) {
  check_dims(x, p, "conjugate");
  if (!is_orthogonal(p)) throw InvalidArgument("conjugate needs an orthogonal P");
  return p * x * p.transpose();
}

RatMatrix apply_congruence(const RatMatrix& x, const std::vector<int>& perm) {
  const int n = x.n();
  if (static_cast<int>(perm.size()) != n || !is_permutation(perm))
    throw InvalidArgument("congruence needs a permutation of order n");
  std::vector<Int> num(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) num[static_cast<std::size_t>(perm[i]) * n + perm[j]] = x.num(i, j);
  return RatMatrix(n, x.den(), std::move(num));
}

QuasiNormalForm quasi_normal_form(const RatMatrix& x) {
  if (!is_symmetric(x)) throw InvalidArgument("quasi_normal_form needs a symmetric matrix");
  QuasiNormalForm out;
  out.sign = trace(x) < 0 ? -1 : 1;
  const RatMatrix signed_x = out.sign < 0 ? -x : x;
  const int n = x.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return signed_x.num(a, a) > signed_x.num(b, b); });
  out.perm.assign(n, 0);
  for (int pos = 0; pos < n; ++pos) out.perm[order[pos]] = pos;
  out.matrix = apply_congruence(signed_x, out.perm);
  return out;
}

RatMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  Int den;
  std::vector<std::vector<Int>> rows;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string token;
      ls >> token;
      if (token.rfind("1/", 0) != 0 || den.set_str(token.substr(2), 10) != 0 || den <= 0)
        throw ParseError("matrix text must start with a line \"1/d\", d a positive integer");
      have_header = true;
      continue;
    }
    std::vector<Int> row;
    std::string token;
    while (ls >> token) {
      Int v;
      if (v.set_str(token, 10) != 0) throw ParseError("not an integer: " + token);
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (!have_header || rows.empty()) throw ParseError("empty matrix text");
  const int n = static_cast<int>(rows.size());
  std::vector<Int> num;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw ParseError("matrix rows must have " + std::to_string(n) + " entries");
    num.insert(num.end(), row.begin(), row.end());
  }
  return RatMatrix(n, den, std::move(num));
}

}  // namespace orthopat
