#include "orthopat/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lambda_sharp_layout.hpp"
#include "zigzag_layout.hpp"

namespace orthopat {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError(what);
}

struct Grid {
  int n;
  std::vector<Rat> cells;

  explicit Grid(int order) : n(order), cells(static_cast<std::size_t>(order) * order, Rat(0)) {}
  Rat& at(int i, int j) { return cells[static_cast<std::size_t>(i) * n + j]; }
  const Rat& at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j]; }
  RatMatrix matrix() const { return RatMatrix::from_entries(n, cells); }
};

bool on_circle(const CirclePoint& p) { return p.x * p.x + p.y * p.y == 1; }

void check_symmetric_orthogonal(const RatMatrix& x, const char* who) {
  if (!is_symmetric(x)) throw InvalidArgument(std::string(who) + " needs a symmetric matrix");
  if (!is_orthogonal(x)) throw InvalidArgument(std::string(who) + " needs an orthogonal matrix");
}

// Fixed skew matrices for the conjugation retries.
SkewRatMatrix skew_attempt(int n, int attempt) {
  Grid g(n);
  int q = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++q) {
      const int v = (q + attempt) % 4 + 1;
      g.at(i, j) = make_rat(Int(q % 2 == 0 ? v : -v), Int(2));
      g.at(j, i) = -g.at(i, j);
    }
  }
  return SkewRatMatrix(g.matrix());
}

RatMatrix full_support_nonnegative(int n, long long t) {
  if (n == 2) return RatMatrix::from_integers(2, 5, {3, 4, 4, -3});
  if (t == n - 2) return grover(n);
  const RatMatrix z = direct_sum(full_support_nonnegative(n - 2, t), RatMatrix::from_integers(2, 5, {3, 4, 4, -3}));
  const ZeroPattern full = ZeroPattern::full(n);
  for (int attempt = 0; attempt < 100; ++attempt) {
    const RatMatrix x = conjugate(z, cayley(skew_attempt(n, attempt)));
    if (support(x) == full) return x;
  }
  throw ConstructionError("no full-support conjugate within 100 attempts for n=" + std::to_string(n));
}

RatMatrix embed_block(int n, int at, const Rat& p, const Rat& q, const Rat& r, const Rat& s) {
  Grid g(n);
  for (int i = 0; i < n; ++i) g.at(i, i) = 1;
  g.at(at, at) = p;
  g.at(at, at + 1) = q;
  g.at(at + 1, at) = r;
  g.at(at + 1, at + 1) = s;
  return g.matrix();
}

int delta_level(const ZeroPattern& p) {
  for (int l = 0; l <= p.n(); ++l)
    if (p == pattern_family(PatternFamily::Delta, p.n(), l)) return l;
  return -1;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Arithmetic in GF(p) or GF(p^2) = GF(p)[t]/(t^2 + c1 t + c0). Element index
// a0 + a1 p stands for a0 + a1 t.
class FiniteField {
 public:
  FiniteField(int p, int k) : p_(p), k_(k) {
    if (k == 2) {
      for (int c1 = 0; c1 < p && !found_; ++c1) {
        for (int c0 = 0; c0 < p && !found_; ++c0) {
          bool root = false;
          for (int z = 0; z < p && !root; ++z) root = (z * z + c1 * z + c0) % p == 0;
          if (!root) {
            c1_ = c1;
            c0_ = c0;
            found_ = true;
          }
        }
      }
    }
  }

  int sub(int a, int b) const {
    const int a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
    return (a0 - b0 + p_) % p_ + ((a1 - b1 + p_) % p_) * p_;
  }

  int mul(int a, int b) const {
    if (k_ == 1) return a * b % p_;
    const int a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
    const int hi = a1 * b1 % p_;
    const int lo = (a0 * b0 - hi * c0_ % p_ + p_ * p_) % p_;
    const int mid = (a0 * b1 + a1 * b0 - hi * c1_ % p_ + p_ * p_) % p_;
    return lo + mid * p_;
  }

 private:
  int p_;
  int k_;
  int c1_ = 0;
  int c0_ = 0;
  bool found_ = false;
};

void normalize_conference(ConferenceMatrix& c) {
  const int n = c.n;
  auto cell = [&](int i, int j) -> int& { return c.entries[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 1; i < n; ++i)
    if (cell(i, 0) < 0)
      for (int j = 0; j < n; ++j) cell(i, j) = -cell(i, j);
  for (int j = 1; j < n; ++j)
    if (cell(0, j) < 0)
      for (int i = 0; i < n; ++i) cell(i, j) = -cell(i, j);
}

const Rat& zigzag_value(const ZigzagSpec& s, detail::ZigzagFactor f) {
  return f.is_y ? s.ys[static_cast<std::size_t>(f.index - 1)] : s.xs[static_cast<std::size_t>(f.index)];
}

std::vector<CirclePoint> default_points(std::size_t count) { return first_circle_points(count); }

// Z_4 from two circle points, then each growth step splits the leaf.
RatMatrix sharp_matrix(int n, const std::vector<CirclePoint>& pts) {
  const std::size_t needed = 2 + static_cast<std::size_t>(n - 4) / 2;
  if (pts.size() < needed) throw InvalidArgument("symmetric_maximal needs " + std::to_string(needed) + " circle points");
  const Rat &x0 = pts[0].x, &y0 = pts[0].y, &x1 = pts[1].x, &y1 = pts[1].y;
  Grid z(4);
  const Rat rows[4][4] = {{x0 * x1 * x1, x0 * x1 * y1, y0 * x1, y1},
                          {x0 * x1 * y1, x0 * y1 * y1, y0 * y1, -x1},
                          {y0 * x1, y0 * y1, -x0, 0},
                          {y1, -x1, 0, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) z.at(i, j) = rows[i][j];

  for (int m = 4, k = 2; m < n; m += 2, ++k) {
    const Rat& c = pts[static_cast<std::size_t>(k)].x;
    const Rat& s = pts[static_cast<std::size_t>(k)].y;
    const detail::SharpStep step = detail::sharp_step(m);
    // the second twin's sign alternates so that Z_6 and Z_8 match their displays
    const int flip = m % 4 == 0 ? 1 : -1;
    Grid q(m + 2);
    for (int u = 0; u < m; ++u) {
      const int nu = step.remap[u];
      if (nu < 0) continue;
      for (int v = 0; v < m; ++v) {
        const int nv = step.remap[v];
        if (nv >= 0) q.at(nu, nv) = z.at(u, v);
      }
      const Rat& w = z.at(u, step.old_leaf);
      q.at(nu, step.twin_a) = q.at(step.twin_a, nu) = c * w;
      q.at(nu, step.twin_b) = q.at(step.twin_b, nu) = -flip * s * w;
    }
    q.at(step.twin_a, step.new_leaf) = q.at(step.new_leaf, step.twin_a) = s;
    q.at(step.twin_b, step.new_leaf) = q.at(step.new_leaf, step.twin_b) = flip * c;
    z = std::move(q);
  }
  return z.matrix();
}

// (symbol, sign) per cell; symbol 0 is a structural zero, 1..5 = x, y, z, a, b.
constexpr int kDesign[8][8][2] = {
    {{1, 1}, {2, 1}, {3, 1}, {0, 0}, {4, 1}, {0, 0}, {0, 0}, {5, -1}},
    {{2, 1}, {1, -1}, {0, 0}, {3, -1}, {0, 0}, {4, -1}, {5, 1}, {0, 0}},
    {{3, 1}, {0, 0}, {1, -1}, {2, 1}, {0, 0}, {5, -1}, {4, -1}, {0, 0}},
    {{0, 0}, {3, -1}, {2, 1}, {1, 1}, {5, 1}, {0, 0}, {0, 0}, {4, 1}},
    {{4, 1}, {0, 0}, {0, 0}, {5, 1}, {1, -1}, {2, 1}, {3, 1}, {0, 0}},
    {{0, 0}, {4, -1}, {5, -1}, {0, 0}, {2, 1}, {1, 1}, {0, 0}, {3, -1}},
    {{0, 0}, {5, 1}, {4, -1}, {0, 0}, {3, 1}, {0, 0}, {1, 1}, {2, 1}},
    {{5, -1}, {0, 0}, {0, 0}, {4, 1}, {0, 0}, {3, -1}, {2, 1}, {1, -1}},
};

const Rat& design_value(const OrthogonalDesignAssignment& v, int symbol) {
  switch (symbol) {
    case 1: return v.x;
    case 2: return v.y;
    case 3: return v.z;
    case 4: return v.a;
    default: return v.b;
  }
}

}  // namespace

std::vector<CirclePoint> circle_points(int max_param) {
  if (max_param < 2) throw InvalidArgument("circle_points needs max_param >= 2");
  std::vector<CirclePoint> out;
  for (int m = 2; m <= max_param; ++m) {
    for (int k = 1; k < m; ++k) {
      if (std::gcd(m, k) != 1 || (m - k) % 2 == 0) continue;
      const long mm = 1L * m * m, kk = 1L * k * k;
      out.push_back({make_rat(Int(mm - kk), Int(mm + kk)), make_rat(Int(2L * m * k), Int(mm + kk))});
    }
  }
  std::sort(out.begin(), out.end(), [](const CirclePoint& a, const CirclePoint& b) {
    if (a.x.get_den() != b.x.get_den()) return a.x.get_den() < b.x.get_den();
    return a.x < b.x;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CirclePoint> first_circle_points(std::size_t count) {
  // circle_points(m) holds every point with denominator below (m+1)^2
  for (int m = 4;; m *= 2) {
    std::vector<CirclePoint> all = circle_points(m);
    const Int bound = Int(m + 1) * (m + 1);
    std::vector<CirclePoint> out;
    for (auto& p : all)
      if (p.x.get_den() < bound) out.push_back(std::move(p));
    if (out.size() >= count) {
      out.resize(count);
      return out;
    }
  }
}

RatMatrix grover(int n) {
  if (n < 1) throw InvalidArgument("grover needs n >= 1");
  std::vector<long> num(static_cast<std::size_t>(n) * n, -2);
  for (int i = 0; i < n; ++i) num[static_cast<std::size_t>(i) * n + i] = n - 2;
  RatMatrix x = RatMatrix::from_integers(n, n, num);
  require(is_orthogonal(x) && is_involutory(x) && trace(x) == n - 2, "grover self-check failed");
  return x;
}

RatMatrix symmetric_full_support(int n, long long t) {
  if (n < 3) throw InvalidArgument("symmetric_full_support needs n >= 3");
  const long long abs_t = t < 0 ? -t : t;
  if (abs_t > n - 2 || (n - abs_t) % 2 != 0)
    throw InvalidArgument("trace " + std::to_string(t) + " is not n - 2k with 1 <= k <= n-1 for n=" + std::to_string(n));
  RatMatrix x = full_support_nonnegative(n, abs_t);
  if (t < 0) x = -x;
  require(is_symmetric(x) && is_orthogonal(x) && trace(x) == Rat(static_cast<long>(t)) && support(x) == ZeroPattern::full(n),
          "symmetric_full_support self-check failed");
  return x;
}

RatMatrix append_full_dimension(const RatMatrix& x, int m) {
  check_symmetric_orthogonal(x, "append_full_dimension");
  const int n = x.n();
  if (n < 2 || m <= n) throw InvalidArgument("append_full_dimension needs m > n > 1");
  for (int i = 0; i < n; ++i)
    if (x.num(i, n - 1) == 0) throw InvalidArgument("append_full_dimension: last column has a zero in row " + std::to_string(i + 1));

  const std::vector<CirclePoint> pts = default_points(1000);
  RatMatrix y = x;
  for (int order = n; order < m; ++order) {
    const RatMatrix base = direct_sum(y, RatMatrix::identity(1));
    const ZeroPattern old = support(y);
    bool done = false;
    for (const CirclePoint& pt : pts) {
      const RatMatrix z = conjugate(base, embed_block(order + 1, order - 1, pt.x, pt.y, pt.y, -pt.x));
      const ZeroPattern s = support(z);
      bool ok = true;
      for (int i = 0; i <= order && ok; ++i)
        for (int j = 0; j <= order && ok; ++j)
          ok = (i < order && j < order) ? s(i, j) == old(i, j) : s(i, j);
      if (ok) {
        y = z;
        done = true;
        break;
      }
    }
    if (!done) throw ConstructionError("append_full_dimension: no circle point among the first 1000 works");
  }
  require(is_symmetric(y) && is_orthogonal(y) && trace(y) == trace(x) + (m - n), "append_full_dimension self-check failed");
  return y;
}

RatMatrix diagonal_zero_reduction(const RatMatrix& x, int k) {
  check_symmetric_orthogonal(x, "diagonal_zero_reduction");
  const int n = x.n();
  const int l = delta_level(support(x));
  if (l < 0) throw InvalidArgument("diagonal_zero_reduction: support is not a Delta pattern");
  if (k < 0 || k > l) throw InvalidArgument("diagonal_zero_reduction needs 0 <= k <= l, l=" + std::to_string(l));

  const std::vector<CirclePoint> pts = default_points(1000);
  RatMatrix y = x;
  // With a zero diagonal the only trace is 0, so one zero cannot be filled
  // alone; the last two are filled together.
  if (l == n && k == n - 1) throw InvalidArgument("diagonal_zero_reduction: Delta_{n,n-1} has nonzero trace");
  for (int cur = l; cur > k;) {
    const int step = cur == n ? 2 : 1;
    const int at = cur == n ? n - 2 : cur - 1;
    const ZeroPattern target = pattern_family(PatternFamily::Delta, n, cur - step);
    cur -= step;
    bool done = false;
    for (const CirclePoint& pt : pts) {
      const RatMatrix z = conjugate(y, embed_block(n, at, pt.x, -pt.y, pt.y, pt.x));
      if (support(z) == target) {
        y = z;
        done = true;
        break;
      }
    }
    if (!done) throw ConstructionError("diagonal_zero_reduction: no circle point among the first 1000 works");
  }
  require(is_symmetric(y) && is_orthogonal(y) && trace(y) == trace(x) &&
              support(y) == pattern_family(PatternFamily::Delta, n, k),
          "diagonal_zero_reduction self-check failed");
  return y;
}

bool ConferenceMatrix::is_symmetric() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool ConferenceMatrix::is_normalized() const {
  if ((*this)(0, 0) != 0) return false;
  for (int i = 1; i < n; ++i)
    if ((*this)(0, i) != 1 || (*this)(i, 0) != 1) return false;
  return true;
}

bool ConferenceMatrix::is_conference() const {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = (*this)(i, j);
      if (i == j ? v != 0 : v * v != 1) return false;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long long dot = 0;
      for (int c = 0; c < n; ++c) dot += (*this)(i, c) * (*this)(j, c);
      if (dot != (i == j ? n - 1 : 0)) return false;
    }
  }
  return true;
}

ConferenceMatrix paley_conference(int q) {
  if (q < 3 || q % 2 == 0) throw InvalidArgument("paley_conference needs an odd prime power q, got " + std::to_string(q));
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  for (int r = q; r > 1; r /= p) {
    if (r % p != 0) throw InvalidArgument(std::to_string(q) + " is not a prime power");
    ++k;
  }
  if (k > 2) throw InvalidArgument("paley_conference supports q = p or p^2 only, got " + std::to_string(q));

  const FiniteField f(p, k);
  std::vector<int> chi(static_cast<std::size_t>(q), -1);
  chi[0] = 0;
  for (int z = 1; z < q; ++z) chi[static_cast<std::size_t>(f.mul(z, z))] = 1;

  ConferenceMatrix c;
  c.n = q + 1;
  c.entries.assign(static_cast<std::size_t>(c.n) * c.n, 0);
  auto cell = [&](int i, int j) -> int& { return c.entries[static_cast<std::size_t>(i) * c.n + j]; };
  for (int i = 1; i <= q; ++i) {
    cell(0, i) = 1;
    cell(i, 0) = q % 4 == 1 ? 1 : -1;
    for (int j = 1; j <= q; ++j) cell(i, j) = chi[static_cast<std::size_t>(f.sub(i - 1, j - 1))];
  }
  normalize_conference(c);
  require(c.is_conference() && c.is_normalized(), "paley_conference self-check failed for q=" + std::to_string(q));
  require(q % 4 != 1 || c.is_symmetric(), "paley_conference: q = 1 mod 4 but the result is not symmetric");
  return c;
}

RatMatrix conference_orthogonal(int m) {
  if (m < 3 || m % 2 == 0 || !is_prime(m)) throw InvalidArgument("conference_orthogonal needs an odd prime m, got " + std::to_string(m));
  const ConferenceMatrix c = paley_conference(m * m);
  std::vector<long> num(c.entries.begin(), c.entries.end());
  RatMatrix x = RatMatrix::from_integers(c.n, m, num);
  require(is_symmetric(x) && is_orthogonal(x) && trace(x) == 0 &&
              support(x) == pattern_family(PatternFamily::Hollow, c.n),
          "conference_orthogonal self-check failed");
  return x;
}

ZigzagSpec ZigzagSpec::from_points(int n, const std::vector<CirclePoint>& points) {
  if (n < 1) throw InvalidArgument("zigzag order must be >= 1");
  if (points.size() < static_cast<std::size_t>(n - 1)) throw InvalidArgument("zigzag needs n-1 circle points");
  ZigzagSpec s;
  s.n = n;
  s.xs.push_back(1);
  for (int k = 1; k < n; ++k) {
    s.xs.push_back(points[static_cast<std::size_t>(k - 1)].x);
    s.ys.push_back(points[static_cast<std::size_t>(k - 1)].y);
  }
  s.xs.push_back(1);
  return s;
}

ZigzagSpec ZigzagSpec::palindromic(int n, const std::vector<CirclePoint>& points) {
  if (n < 1) throw InvalidArgument("zigzag order must be >= 1");
  if (points.size() < static_cast<std::size_t>(n / 2)) throw InvalidArgument("palindromic zigzag needs n/2 circle points");
  std::vector<CirclePoint> seq;
  for (int k = 1; k < n; ++k) seq.push_back(points[static_cast<std::size_t>(std::min(k, n - k) - 1)]);
  return from_points(n, seq);
}

RatMatrix zigzag(const ZigzagSpec& spec) {
  const int n = spec.n;
  if (n < 1 || spec.xs.size() != static_cast<std::size_t>(n) + 1 || spec.ys.size() != static_cast<std::size_t>(n - 1))
    throw InvalidArgument("zigzag spec needs x_0..x_n and y_1..y_{n-1}");
  for (const Rat* e : {&spec.xs.front(), &spec.xs.back()})
    if (*e != 1 && *e != -1) throw InvalidArgument("zigzag needs x_0, x_n in {1, -1}");
  for (int k = 1; k < n; ++k)
    if (!on_circle({spec.xs[static_cast<std::size_t>(k)], spec.ys[static_cast<std::size_t>(k - 1)]}))
      throw InvalidArgument("zigzag needs x_k^2 + y_k^2 = 1 for k=" + std::to_string(k));

  Grid g(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const auto term = detail::zigzag_term(n, r, c);
      if (term) g.at(r, c) = term->sign * zigzag_value(spec, term->first) * zigzag_value(spec, term->second);
    }
  }
  RatMatrix x = g.matrix();
  require(is_orthogonal(x), "zigzag self-check failed");
  return x;
}

RatMatrix symmetric_maximal(int n) {
  if (n <= 2) throw InvalidArgument("symmetric_maximal needs n > 2");
  return symmetric_maximal(n, default_points(n % 2 == 1 ? static_cast<std::size_t>(n / 2) : 2 + static_cast<std::size_t>(n - 4) / 2));
}

RatMatrix symmetric_maximal(int n, const std::vector<CirclePoint>& points) {
  if (n <= 2) throw InvalidArgument("symmetric_maximal needs n > 2");
  if (n > kMaxOrder) throw InvalidArgument("symmetric_maximal order exceeds 64");
  for (const CirclePoint& p : points)
    if (!on_circle(p) || !p.nondegenerate()) throw InvalidArgument("symmetric_maximal needs nondegenerate circle points");

  RatMatrix y;
  ZeroPattern target;
  if (n % 2 == 1) {
    const RatMatrix x = zigzag(ZigzagSpec::palindromic(n, points));
    Grid g(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(n - 1 - i, j) = x(i, j);
    y = g.matrix();
    target = pattern_family(PatternFamily::Lambda, n);
  } else {
    y = sharp_matrix(n, points);
    target = pattern_family(PatternFamily::LambdaSharp, n);
  }
  require(is_symmetric(y) && is_orthogonal(y) && support(y) == target,
          "symmetric_maximal self-check failed for n=" + std::to_string(n));
  return y;
}

RatMatrix hypercube_matrix(const std::vector<Rat>& alphas) {
  const int k = static_cast<int>(alphas.size());
  if (k < 1 || k > 6) throw InvalidArgument("hypercube_matrix needs 1..6 parameters");
  Rat norm = 0;
  for (const Rat& a : alphas) {
    if (a == 0) throw InvalidArgument("hypercube_matrix parameters must be nonzero");
    norm += a * a;
  }
  if (norm != 1) throw InvalidArgument("hypercube_matrix parameters must have unit squared sum");

  Grid g(1);
  for (int level = 0; level < k; ++level) {
    const int h = g.n;
    Grid next(2 * h);
    for (int i = 0; i < h; ++i) {
      for (int j = 0; j < h; ++j) {
        next.at(i, j) = g.at(i, j);
        next.at(i + h, j + h) = -g.at(i, j);
      }
      next.at(i, i + h) = next.at(i + h, i) = alphas[static_cast<std::size_t>(level)];
    }
    g = std::move(next);
  }
  RatMatrix x = g.matrix();
  require(is_symmetric(x) && is_orthogonal(x) && is_involutory(x) && trace(x) == 0 &&
              support(x) == pattern_family(PatternFamily::Hypercube, k),
          "hypercube_matrix self-check failed");
  return x;
}

std::vector<Rat> rational_unit_vector(int n, const std::vector<CirclePoint>& pool) {
  if (n < 1) throw InvalidArgument("rational_unit_vector needs n >= 1");
  std::vector<const CirclePoint*> usable;
  for (const CirclePoint& p : pool)
    if (p.nondegenerate() && on_circle(p)) usable.push_back(&p);
  if (usable.size() < static_cast<std::size_t>(n - 1))
    throw InvalidArgument("rational_unit_vector needs " + std::to_string(n - 1) + " nondegenerate circle points");
  std::vector<Rat> out;
  Rat prefix = 1;
  for (int i = 0; i + 1 < n; ++i) {
    out.push_back(prefix * usable[static_cast<std::size_t>(i)]->x);
    prefix *= usable[static_cast<std::size_t>(i)]->y;
  }
  out.push_back(prefix);
  Rat norm = 0;
  for (const Rat& a : out) norm += a * a;
  require(norm == 1, "rational_unit_vector self-check failed");
  return out;
}

RatMatrix hessenberg_matrix(int n, const CirclePoint& p) {
  if (n < 2) throw InvalidArgument("hessenberg_matrix needs n >= 2");
  if (n > kMaxOrder) throw InvalidArgument("hessenberg_matrix order exceeds 64");
  if (!on_circle(p) || !p.nondegenerate()) throw InvalidArgument("hessenberg_matrix needs a nondegenerate circle point");
  const Rat &a = p.x, &b = p.y;
  Grid x(2);
  x.at(0, 0) = a;
  x.at(0, 1) = -b;
  x.at(1, 0) = b;
  x.at(1, 1) = a;
  for (int m = 3; m <= n; ++m) {
    // (X ⊕ 1)(I ⊕ X_2): columns m-2 and m-1 mix
    Grid next(m);
    for (int i = 0; i < m - 1; ++i)
      for (int j = 0; j < m - 1; ++j) next.at(i, j) = x.at(i, j);
    next.at(m - 1, m - 1) = 1;
    for (int i = 0; i < m; ++i) {
      const Rat u = next.at(i, m - 2);
      const Rat v = next.at(i, m - 1);
      next.at(i, m - 2) = u * a + v * b;
      next.at(i, m - 1) = -u * b + v * a;
    }
    x = std::move(next);
  }
  Grid y(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y.at(n - 1 - i, j) = x.at(i, j);
  RatMatrix out = y.matrix();
  require(is_symmetric(out) && is_orthogonal(out) && trace(out) == n % 2 &&
              support(out) == pattern_family(PatternFamily::HessenbergSym, n),
          "hessenberg_matrix self-check failed for n=" + std::to_string(n));
  return out;
}

ZeroPattern orthogonal_design_support(const OrthogonalDesignAssignment& v) {
  ZeroPattern p(8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (kDesign[i][j][0] != 0 && design_value(v, kDesign[i][j][0]) != 0) p.set(i, j);
  return p;
}

RatMatrix orthogonal_design_8(const OrthogonalDesignAssignment& v) {
  if (v.x * v.x + v.y * v.y + v.z * v.z + v.a * v.a + v.b * v.b != 1)
    throw InvalidArgument("orthogonal design values must have unit squared sum");
  Grid g(8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (kDesign[i][j][0] != 0) g.at(i, j) = kDesign[i][j][1] * design_value(v, kDesign[i][j][0]);
  RatMatrix x = g.matrix();
  require(is_symmetric(x) && is_orthogonal(x) && support(x) == orthogonal_design_support(v),
          "orthogonal_design_8 self-check failed");
  return x;
}

}  // namespace orthopat
