// Generators for rational orthogonal matrices with known supports. Every
// function verifies its result exactly and throws ConstructionError when a
// self-check fails.
#pragma once

#include <vector>

#include "orthopat/linalg.hpp"

namespace orthopat {

struct CirclePoint {
  Rat x;
  Rat y;

  bool nondegenerate() const { return x != 0 && y != 0; }
  bool operator==(const CirclePoint&) const = default;
};

/// Points ((m^2-k^2)/(m^2+k^2), 2mk/(m^2+k^2)) with 1 <= k < m <= max_param,
/// gcd(m,k) = 1 and m-k odd, sorted by denominator then x.
std::vector<CirclePoint> circle_points(int max_param);

/// The first `count` points of the same parameterization.
std::vector<CirclePoint> first_circle_points(std::size_t count);

/// I - (2/n) J.
RatMatrix grover(int n);

/// Symmetric, full support, trace t = n - 2k with 1 <= k <= n-1.
RatMatrix symmetric_full_support(int n, long long t);

/// Grows a symmetric orthogonal X with nonzero last column to order m. The
/// old support is kept, new rows and columns are full and the trace grows by
/// m - n.
RatMatrix append_full_dimension(const RatMatrix& x, int m);

/// Maps a symmetric orthogonal matrix with support Delta_{n,l} to one with
/// support Delta_{n,k} (k <= l) and the same trace.
RatMatrix diagonal_zero_reduction(const RatMatrix& x, int k);

struct ConferenceMatrix {
  int n = 0;
  std::vector<int> entries;  // row-major, values in {-1, 0, 1}

  int operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
  bool is_symmetric() const;
  bool is_normalized() const;
  /// Zero diagonal, +-1 elsewhere and C C^T = (n-1) I.
  bool is_conference() const;
};

/// Normalized Paley conference matrix of order q + 1 for q = p or p^2 with p
/// an odd prime. Symmetric when q = 1 (mod 4).
ConferenceMatrix paley_conference(int q);

/// (1/m) C for a symmetric normalized conference matrix C of order 1 + m^2;
/// m an odd prime.
RatMatrix conference_orthogonal(int m);

struct ZigzagSpec {
  int n = 0;
  std::vector<Rat> xs;  // x_0 .. x_n
  std::vector<Rat> ys;  // y_1 .. y_{n-1}, stored from index 0

  /// x_0 = x_n = 1 and (x_k, y_k) = points[k-1].
  static ZigzagSpec from_points(int n, const std::vector<CirclePoint>& points);
  /// Palindromic choice (x_k, y_k) = (x_{n-k}, y_{n-k}) drawn from points.
  static ZigzagSpec palindromic(int n, const std::vector<CirclePoint>& points);
};

RatMatrix zigzag(const ZigzagSpec& spec);

/// Symmetric orthogonal with support Lambda_n (odd n) or Lambda#_n (even n).
RatMatrix symmetric_maximal(int n);
RatMatrix symmetric_maximal(int n, const std::vector<CirclePoint>& points);

/// Order 2^k for k = alphas.size(); symmetric involutory with hypercube support.
RatMatrix hypercube_matrix(const std::vector<Rat>& alphas);

/// alpha_1 = x_1, alpha_2 = y_1 x_2, ..., alpha_n = y_1 ... y_{n-1}.
std::vector<Rat> rational_unit_vector(int n, const std::vector<CirclePoint>& pool);

/// Symmetric orthogonal with the antidiagonal Hessenberg support.
RatMatrix hessenberg_matrix(int n, const CirclePoint& p);

struct OrthogonalDesignAssignment {
  Rat x;
  Rat y;
  Rat z;
  Rat a;
  Rat b;
};

/// The fixed symmetric 8 x 8 design in x, y, z, a, b.
RatMatrix orthogonal_design_8(const OrthogonalDesignAssignment& v);

/// Cells of the design occupied by the nonzero variables of v.
ZeroPattern orthogonal_design_support(const OrthogonalDesignAssignment& v);

}  // namespace orthopat
