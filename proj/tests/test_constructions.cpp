#include <doctest.h>

#include <algorithm>
#include <random>

#include "orthopat/catalog.hpp"
#include "orthopat/constructions.hpp"
#include "orthopat/search.hpp"

using namespace orthopat;

namespace {

Rat q(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

RatMatrix from_rats(int n, std::vector<Rat> e) { return RatMatrix::from_entries(n, e); }

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = load_catalog();
  return entries;
}

void check_basic(const RatMatrix& x) {
  CHECK(is_orthogonal(x));
  CHECK(is_sq(support(x)));
}

// Even-order displays with (x_k, y_k) = pts[k].
RatMatrix z6(const std::vector<CirclePoint>& p) {
  const Rat &x0 = p[0].x, &y0 = p[0].y, &x1 = p[1].x, &y1 = p[1].y, &x2 = p[2].x, &y2 = p[2].y;
  const Rat o = 0;
  return from_rats(6, {o, o, o, o, y2, x2,
                       o, x0 * x1 * x1, x0 * x1 * y1, y0 * x1, y1 * x2, -y1 * y2,
                       o, x0 * x1 * y1, x0 * y1 * y1, y0 * y1, -x1 * x2, x1 * y2,
                       o, y0 * x1, y0 * y1, -x0, o, o,
                       y2, y1 * x2, -x1 * x2, o, o, o,
                       x2, -y1 * y2, x1 * y2, o, o, o});
}

RatMatrix z8(const std::vector<CirclePoint>& p) {
  const Rat &x0 = p[0].x, &y0 = p[0].y, &x1 = p[1].x, &y1 = p[1].y, &x2 = p[2].x, &y2 = p[2].y, &x3 = p[3].x,
            &y3 = p[3].y;
  const Rat o = 0;
  return from_rats(8, {o, o, o, o, o, y2 * x3, x2 * x3, y3,
                       o, o, o, o, o, y2 * y3, x2 * y3, -x3,
                       o, o, x0 * x1 * x1, x0 * x1 * y1, y0 * x1, y1 * x2, -y1 * y2, o,
                       o, o, x0 * x1 * y1, x0 * y1 * y1, y0 * y1, -x1 * x2, x1 * y2, o,
                       o, o, y0 * x1, y0 * y1, -x0, o, o, o,
                       y2 * x3, y2 * y3, y1 * x2, -x1 * x2, o, o, o, o,
                       x2 * x3, x2 * y3, -y1 * y2, x1 * y2, o, o, o, o,
                       y3, -x3, o, o, o, o, o, o});
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("circle points") {
  const auto two = circle_points(2);
  CHECK(std::find(two.begin(), two.end(), CirclePoint{q(3, 5), q(4, 5)}) != two.end());
  const auto three = circle_points(3);
  CHECK(std::find(three.begin(), three.end(), CirclePoint{q(5, 13), q(12, 13)}) != three.end());
  const auto many = circle_points(30);
  for (std::size_t i = 0; i < many.size(); ++i) {
    CHECK(many[i].x * many[i].x + many[i].y * many[i].y == 1);
    CHECK(many[i].nondegenerate());
    if (i > 0) CHECK(many[i - 1].x.get_den() <= many[i].x.get_den());
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(many[i] == many[j]);
  }
  const auto first = first_circle_points(12);
  CHECK(first.size() == 12);
  CHECK(first.front() == CirclePoint{q(3, 5), q(4, 5)});
  CHECK_THROWS_AS(circle_points(1), InvalidArgument);
}

TEST_CASE("grover") {
  CHECK(grover(2) == RatMatrix::from_integers(2, 1, {0, -1, -1, 0}));
  CHECK(support(grover(2)) == pattern_family(PatternFamily::Hollow, 2));
  CHECK(grover(3) == RatMatrix::from_integers(3, 3, {1, -2, -2, -2, 1, -2, -2, -2, 1}));
  CHECK(trace(grover(4)) == 2);
  for (int n = 2; n <= 64; ++n) {
    const RatMatrix g = grover(n);
    CHECK(is_involutory(g));
    CHECK(trace(g) == n - 2);
    if (n > 2) CHECK(support(g) == ZeroPattern::full(n));
  }
  CHECK_THROWS_AS(grover(0), InvalidArgument);
}

TEST_CASE("symmetric full support") {
  CHECK(trace(symmetric_full_support(3, 1)) == 1);
  for (int n = 3; n <= 7; ++n)
    for (long long t = n - 2; t >= -(n - 2); t -= 2) {
      CAPTURE(n);
      CAPTURE(t);
      const RatMatrix x = symmetric_full_support(n, t);
      check_basic(x);
      CHECK(is_symmetric(x));
      CHECK(trace(x) == Rat(static_cast<long>(t)));
      CHECK(support(x) == ZeroPattern::full(n));
    }
  CHECK(support(symmetric_full_support(5, 3)) == support(find_entry(catalog(), "@n=5,k=23,t=3").matrix));
  CHECK_THROWS_AS(symmetric_full_support(4, 1), InvalidArgument);
  CHECK_THROWS_AS(symmetric_full_support(4, 4), InvalidArgument);
  CHECK_THROWS_AS(symmetric_full_support(4, -4), InvalidArgument);
  CHECK_THROWS_AS(symmetric_full_support(2, 0), InvalidArgument);
}

TEST_CASE("append full dimension") {
  const RatMatrix x = find_entry(catalog(), "@n=4,k=1,t=0").matrix;
  const RatMatrix y = append_full_dimension(x, 5);
  check_basic(y);
  CHECK(is_symmetric(y));
  CHECK(trace(y) == 1);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i < 4 && j < 4) CHECK((y(i, j) == 0) == (x(i, j) == 0));
      else CHECK(y(i, j) != 0);
    }
  const RatMatrix z = append_full_dimension(x, 6);
  CHECK(trace(z) == trace(x) + 2);
  CHECK(trace(append_full_dimension(z, 8)) == trace(z) + 2);
  CHECK_THROWS_AS(append_full_dimension(x, 4), InvalidArgument);
  // last column has zeros
  CHECK_THROWS_AS(append_full_dimension(RatMatrix::identity(3), 4), InvalidArgument);
  CHECK_THROWS_AS(append_full_dimension(find_entry(catalog(), "@n=4,k=4").matrix, 5), InvalidArgument);
}

TEST_CASE("diagonal zero reduction") {
  SearchProblem sp;
  sp.pattern = pattern_family(PatternFamily::Delta, 4, 2);
  sp.symmetric = true;
  sp.trace_target = 0;
  sp.denom_max = 60;
  const SearchResult r = solve(sp);
  REQUIRE(r.status == SearchStatus::Found);
  const RatMatrix x = *r.solution;

  const RatMatrix y = diagonal_zero_reduction(x, 1);
  check_basic(y);
  CHECK(is_symmetric(y));
  CHECK(support(y) == pattern_family(PatternFamily::Delta, 4, 1));
  CHECK(trace(y) == 0);
  const RatMatrix y0 = diagonal_zero_reduction(x, 0);
  CHECK(support(y0) == ZeroPattern::full(4));
  CHECK(trace(y0) == 0);
  CHECK(diagonal_zero_reduction(x, 2) == x);

  const RatMatrix h = conference_orthogonal(3);
  const RatMatrix h5 = diagonal_zero_reduction(h, 5);
  CHECK(support(h5) == pattern_family(PatternFamily::Delta, 10, 5));
  CHECK(trace(h5) == 0);

  CHECK_THROWS_AS(diagonal_zero_reduction(x, 3), InvalidArgument);
  CHECK_THROWS_AS(diagonal_zero_reduction(h, 9), InvalidArgument);
  CHECK_THROWS_AS(diagonal_zero_reduction(find_entry(catalog(), "@n=4,k=4,l=1,t=0").matrix, 0), InvalidArgument);
}

TEST_CASE("paley conference matrices") {
  const ConferenceMatrix c5 = paley_conference(5);
  CHECK(c5.n == 6);
  CHECK(c5.is_conference());
  CHECK(c5.is_symmetric());
  CHECK(c5.is_normalized());
  const ConferenceMatrix c9 = paley_conference(9);
  CHECK(c9.n == 10);
  CHECK(c9.is_conference());
  CHECK(c9.is_symmetric());
  for (int qq : {3, 7, 11, 13, 17, 25, 49}) {
    CAPTURE(qq);
    const ConferenceMatrix c = paley_conference(qq);
    CHECK(c.is_conference());
    CHECK(c.is_normalized());
    CHECK(c.is_symmetric() == (qq % 4 == 1));
  }
  CHECK(paley_conference(9).entries == c9.entries);
  for (int bad : {4, 1, 15, 27, 0, -3}) CHECK_THROWS_AS(paley_conference(bad), InvalidArgument);
}

TEST_CASE("conference orthogonal") {
  for (int m : {3, 5}) {
    const RatMatrix x = conference_orthogonal(m);
    CHECK(x.n() == 1 + m * m);
    check_basic(x);
    CHECK(is_involutory(x));
    CHECK(trace(x) == 0);
    CHECK(support(x) == pattern_family(PatternFamily::Hollow, 1 + m * m));
  }
  CHECK_THROWS_AS(conference_orthogonal(4), InvalidArgument);
  CHECK_THROWS_AS(conference_orthogonal(9), InvalidArgument);
}

TEST_CASE("zigzag") {
  const auto pts = std::vector<CirclePoint>{{q(3, 5), q(4, 5)}, {q(5, 13), q(12, 13)}};
  const RatMatrix x2 = zigzag(ZigzagSpec::from_points(2, pts));
  CHECK(x2 == from_rats(2, {q(3, 5), q(4, 5), q(-4, 5), q(3, 5)}));
  const RatMatrix x3 = zigzag(ZigzagSpec::from_points(3, pts));
  CHECK(is_orthogonal(x3));
  CHECK(x3.n() * x3.n() - support(x3).ones() == 1);
  CHECK(x3(0, 2) == 0);

  const auto pool = first_circle_points(20);
  for (int n = 3; n <= 12; ++n) {
    const RatMatrix x = zigzag(ZigzagSpec::from_points(n, pool));
    check_basic(x);
    CHECK(n * n - support(x).ones() == (n - 2) * (n - 2));
  }
  ZigzagSpec bad = ZigzagSpec::from_points(3, pts);
  bad.ys[0] = q(1, 2);
  CHECK_THROWS_AS(zigzag(bad), InvalidArgument);
  bad = ZigzagSpec::from_points(3, pts);
  bad.xs[0] = q(1, 2);
  CHECK_THROWS_AS(zigzag(bad), InvalidArgument);
}

TEST_CASE("symmetric maximal") {
  const auto pts = std::vector<CirclePoint>{{q(3, 5), q(4, 5)}, {q(5, 13), q(12, 13)}};
  const RatMatrix y5 = symmetric_maximal(5, pts);
  CHECK(is_symmetric(y5));
  CHECK(support(y5) == pattern_family(PatternFamily::Lambda, 5));
  CHECK(support(symmetric_maximal(4)).ones() == 13);
  const RatMatrix y6 = symmetric_maximal(6);
  CHECK(is_involutory(y6));
  CHECK(support(y6) == pattern_family(PatternFamily::LambdaSharp, 6));

  const auto pool = first_circle_points(4);
  CHECK(symmetric_maximal(6, pool) == z6(pool));
  CHECK(symmetric_maximal(8, pool) == z8(pool));
  const std::vector<CirclePoint> other{{q(5, 13), q(-12, 13)}, {q(-8, 17), q(15, 17)}, {q(7, 25), q(24, 25)}, {q(4, 5), q(3, 5)}};
  CHECK(symmetric_maximal(6, other) == z6(other));
  CHECK(symmetric_maximal(8, other) == z8(other));

  for (int n = 3; n <= 10; ++n) {
    CAPTURE(n);
    const RatMatrix y = symmetric_maximal(n);
    check_basic(y);
    CHECK(is_symmetric(y));
    const ZeroPattern target =
        pattern_family(n % 2 == 1 ? PatternFamily::Lambda : PatternFamily::LambdaSharp, n);
    CHECK(support(y) == target);
    CHECK(is_sq(target));
  }
  CHECK_THROWS_AS(symmetric_maximal(2), InvalidArgument);
  CHECK_THROWS_AS(symmetric_maximal(6, {{1, 0}, {q(3, 5), q(4, 5)}, {q(3, 5), q(4, 5)}}), InvalidArgument);
}

TEST_CASE("hypercube") {
  CHECK(hypercube_matrix({1}) == RatMatrix::from_integers(2, 1, {0, 1, 1, 0}));
  const RatMatrix x2 = hypercube_matrix({q(3, 5), q(4, 5)});
  CHECK(is_symmetric(x2));
  CHECK(support(x2) == pattern_family(PatternFamily::Hypercube, 2));
  const auto pool = first_circle_points(10);
  for (int dim = 1; dim <= 5; ++dim) {
    const RatMatrix x = hypercube_matrix(rational_unit_vector(dim, pool));
    CHECK(x.n() == (1 << dim));
    check_basic(x);
    CHECK(is_involutory(x));
    CHECK(trace(x) == 0);
    CHECK(support(x) == pattern_family(PatternFamily::Hypercube, dim));
  }
  CHECK_THROWS_AS(hypercube_matrix({q(3, 5), q(4, 5), 0}), InvalidArgument);
  CHECK_THROWS_AS(hypercube_matrix({q(1, 2), q(1, 2)}), InvalidArgument);
  CHECK_THROWS_AS(hypercube_matrix({}), InvalidArgument);
}

TEST_CASE("rational unit vectors") {
  const std::vector<CirclePoint> pool{{q(3, 5), q(4, 5)}, {q(5, 13), q(12, 13)}};
  CHECK(rational_unit_vector(1, pool) == std::vector<Rat>{1});
  CHECK(rational_unit_vector(2, pool) == std::vector<Rat>{q(3, 5), q(4, 5)});
  const auto v3 = rational_unit_vector(3, pool);
  CHECK(v3 == std::vector<Rat>{q(3, 5), q(4, 13), q(48, 65)});
  CHECK(v3[0] * v3[0] + v3[1] * v3[1] + v3[2] * v3[2] == 1);
  CHECK_THROWS_AS(rational_unit_vector(4, pool), InvalidArgument);
  CHECK_THROWS_AS(rational_unit_vector(0, pool), InvalidArgument);
}

TEST_CASE("hessenberg") {
  const CirclePoint p{q(4, 5), q(3, 5)};
  CHECK(hessenberg_matrix(3, p) == RatMatrix::from_integers(3, 25, {0, 15, 20, 15, 16, -12, 20, -12, 9}));
  CHECK(hessenberg_matrix(2, p) == from_rats(2, {q(3, 5), q(4, 5), q(4, 5), q(-3, 5)}));
  CHECK(trace(hessenberg_matrix(6, p)) == 0);
  for (int n = 2; n <= 16; ++n) {
    const RatMatrix y = hessenberg_matrix(n, p);
    check_basic(y);
    CHECK(is_symmetric(y));
    CHECK(trace(y) == n % 2);
    CHECK(support(y) == pattern_family(PatternFamily::HessenbergSym, n));
  }
  CHECK_THROWS_AS(hessenberg_matrix(3, {1, 0}), InvalidArgument);
  CHECK_THROWS_AS(hessenberg_matrix(1, p), InvalidArgument);
}

TEST_CASE("orthogonal design") {
  const OrthogonalDesignAssignment v{q(1, 4), q(1, 4), q(1, 4), q(1, 2), q(3, 4)};
  CHECK(v.x * v.x + v.y * v.y + v.z * v.z + v.a * v.a + v.b * v.b == 1);
  const RatMatrix x = orthogonal_design_8(v);
  check_basic(x);
  CHECK(is_symmetric(x));
  CHECK(support(x) == orthogonal_design_support(v));
  CHECK(support(x).ones() == 40);

  const RatMatrix xa = orthogonal_design_8({q(3, 5), q(4, 5) * q(5, 13), q(4, 5) * q(12, 13), 0, 0});
  CHECK(is_orthogonal(xa));
  CHECK(support(xa).ones() < 40);
  const OrthogonalDesignAssignment only_a_zero{q(2, 7), q(3, 7), q(6, 7) * q(3, 5), 0, q(6, 7) * q(4, 5)};
  CHECK(only_a_zero.x * only_a_zero.x + only_a_zero.y * only_a_zero.y + only_a_zero.z * only_a_zero.z +
            only_a_zero.b * only_a_zero.b == 1);
  const RatMatrix x0 = orthogonal_design_8(only_a_zero);
  CHECK(is_orthogonal(x0));
  CHECK(support(x0).ones() == 32);

  std::mt19937_64 rng(51);
  const auto pool = circle_points(12);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<CirclePoint> chosen;
    for (int k = 0; k < 4; ++k) chosen.push_back(pool[pick(rng)]);
    std::vector<Rat> a = rational_unit_vector(5, chosen);
    std::shuffle(a.begin(), a.end(), rng);
    const OrthogonalDesignAssignment w{a[0], a[1], a[2], a[3], a[4]};
    const RatMatrix y = orthogonal_design_8(w);
    check_basic(y);
    CHECK(is_symmetric(y));
    CHECK(support(y).ones() == 40);
  }
  CHECK_THROWS_AS(orthogonal_design_8({1, 1, 0, 0, 0}), InvalidArgument);
}

}
