// Exact rational matrices in common-denominator form X = N / d.
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "orthopat/error.hpp"
#include "orthopat/pattern.hpp"

namespace orthopat {

using Int = mpz_class;
using Rat = mpq_class;

/// Reduced rational from numerator and denominator (denominator != 0).
Rat make_rat(const Int& num, const Int& den);

/// Square matrix N / d with d >= 1 and gcd(d, all N) = 1.
class RatMatrix {
 public:
  RatMatrix() : RatMatrix(1) {}
  explicit RatMatrix(int n);  // zero matrix
  /// Row-major numerators over a common denominator; normalized on entry.
  RatMatrix(int n, Int den, std::vector<Int> num);

  static RatMatrix identity(int n);
  static RatMatrix from_entries(int n, const std::vector<Rat>& entries);
  static RatMatrix from_integers(int n, long den, const std::vector<long>& num);

  int n() const noexcept { return n_; }
  const Int& den() const noexcept { return den_; }
  const Int& num(int i, int j) const { return num_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<Int>& nums() const noexcept { return num_; }
  Rat operator()(int i, int j) const { return make_rat(num(i, j), den_); }

  RatMatrix transpose() const;
  RatMatrix operator-() const;
  RatMatrix scaled(const Rat& c) const;

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

  /// "1/d" followed by n rows of integers.
  std::string to_string() const;

 private:
  void normalize();

  int n_ = 1;
  Int den_ = 1;
  std::vector<Int> num_;
};

/// A RatMatrix with N = -N^T.
class SkewRatMatrix {
 public:
  /// Throws InvalidArgument unless m is skew-symmetric.
  explicit SkewRatMatrix(RatMatrix m);
  const RatMatrix& matrix() const noexcept { return m_; }
  int n() const noexcept { return m_.n(); }

 private:
  RatMatrix m_;
};

RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b);

ZeroPattern support(const RatMatrix& x);
bool is_orthogonal(const RatMatrix& x);
bool is_symmetric(const RatMatrix& x);
bool is_involutory(const RatMatrix& x);
Rat trace(const RatMatrix& x);
Rat determinant(const RatMatrix& x);

/// X with A X = B. Throws SingularMatrixError when A is singular.
RatMatrix solve_exact(const RatMatrix& a, const RatMatrix& b);

/// (I + S)(I - S)^{-1}.
RatMatrix cayley(const SkewRatMatrix& s);

/// P X P^T; throws InvalidArgument if P is not orthogonal.
RatMatrix conjugate(const RatMatrix& x, const RatMatrix& p);

struct QuasiNormalForm {
  RatMatrix matrix;       // sign * (perm applied congruently to X)
  std::vector<int> perm;  // cell (perm[i], perm[j]) of the result comes from (i, j)
  int sign = 1;
};

/// Nonnegative trace and non-increasing diagonal. Throws InvalidArgument for
/// non-symmetric input.
QuasiNormalForm quasi_normal_form(const RatMatrix& x);

RatMatrix apply_congruence(const RatMatrix& x, const std::vector<int>& perm);

/// Parses the "1/d" text format; '#' lines are ignored.
RatMatrix parse_matrix(std::string_view text);

}  // namespace orthopat
