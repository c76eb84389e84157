#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "orthopat/catalog.hpp"
#include "orthopat/search.hpp"

using namespace orthopat;

namespace {

using Vec = std::vector<long long>;

SearchProblem plain(const ZeroPattern& p, long long dmin, long long dmax) {
  SearchProblem sp;
  sp.pattern = p;
  sp.denom_min = dmin;
  sp.denom_max = dmax;
  return sp;
}

std::uint64_t normalized_count(const ZeroPattern& p, long long d, bool tails, std::optional<long long> t = {}) {
  SearchProblem sp = plain(p, d, d);
  sp.mode = SearchMode::EnumerateAll;
  sp.row_order = RowOrder::Natural;
  sp.use_obstructions = false;
  sp.solve_tails = tails;
  sp.exec = Execution::serial();
  if (t) {
    sp.symmetric = true;
    sp.trace_target = t;
  }
  return solve(sp).solutions;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = load_catalog();
  return entries;
}

// Representatives of every equivalence class of n x n patterns.
std::vector<ZeroPattern> class_representatives(int n) {
  std::set<std::string> seen;
  std::vector<ZeroPattern> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
    ZeroPattern p(n);
    for (int c = 0; c < n * n; ++c)
      if ((bits >> c) & 1U) p.set(c / n, c % n);
    const ZeroPattern canon = canonical_equivalence(p).pattern;
    if (seen.insert(canon.to_string()).second) out.push_back(canon);
  }
  return out;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("row candidates") {
  CHECK(row_candidates({true, true}, 5) == std::vector<Vec>{{3, -4}, {3, 4}, {4, -3}, {4, 3}});
  CHECK(row_candidates({true}, 1) == std::vector<Vec>{{1}});
  const auto three = row_candidates({true, true, true}, 3);
  CHECK(three.size() == 12);
  for (const Vec& v : three) {
    CHECK(v[0] > 0);
    CHECK(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] == 9);
    std::multiset<long long> mags{std::abs(v[0]), std::abs(v[1]), std::abs(v[2])};
    CHECK(mags == std::multiset<long long>{1, 2, 2});
  }
  CHECK(row_candidates({true, false, true}, 5).front() == Vec{3, 0, -4});
  CHECK(row_candidates({true, true}, 3).empty());
  CHECK(row_candidates({false, false}, 3).empty());
  CHECK_THROWS_AS(row_candidates({true}, 0), InvalidArgument);
}

TEST_CASE("first solution") {
  const SearchResult r = solve(plain(ZeroPattern::full(2), 1, 5));
  CHECK(r.status == SearchStatus::Found);
  REQUIRE(r.solution);
  CHECK(*r.denominator == 5);
  CHECK(r.solution->den() == 5);
  CHECK(is_orthogonal(*r.solution));
  CHECK(r.exhausted_through == 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK((abs(r.solution->num(i, j)) == 3 || abs(r.solution->num(i, j)) == 4));

  const SearchResult none = solve(plain(ZeroPattern::full(2), 1, 4));
  CHECK(none.status == SearchStatus::Exhausted);
  CHECK_FALSE(none.solution);
  CHECK(none.exhausted_through == 4);

  CHECK(solve(plain(special_pattern("p14"), 1, 50)).status == SearchStatus::Obstructed);

  SearchProblem sym = plain(support(find_entry(catalog(), "@n=4,k=8,t=0").matrix), 1, 2);
  sym.symmetric = true;
  sym.trace_target = 0;
  const SearchResult rs = solve(sym);
  CHECK(rs.status == SearchStatus::Found);
  CHECK(*rs.denominator == 2);
  CHECK(is_symmetric(*rs.solution));
  CHECK(trace(*rs.solution) == 0);
}

TEST_CASE("minimal denominators") {
  auto minimal = [](const char* ref) {
    SearchProblem sp = plain(support(find_entry(catalog(), ref).matrix), 1, 1);
    return minimal_denominator(sp, 100);
  };
  const SearchResult r1 = minimal("@n=3,k=1");
  CHECK(r1.status == SearchStatus::Found);
  CHECK(*r1.denominator == 25);
  CHECK(r1.exhausted_through == 24);
  CHECK(*minimal("@n=4,k=4").denominator == 3);
  CHECK(*minimal("@n=4,k=3").denominator == 33);
}

TEST_CASE("minimality certificates") {
  for (const CatalogEntry& e : catalog()) {
    if (e.symmetric_list || e.n > 4) continue;
    CAPTURE(e.label());
    const ZeroPattern p = support(e.matrix);
    const SearchResult r = minimal_denominator(plain(p, 1, 1), 100);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(e.matrix.den() == static_cast<long>(*r.denominator));
    SearchProblem below = plain(p, 1, *r.denominator - 1);
    below.mode = SearchMode::EnumerateAll;
    CHECK(solve(below).solutions == 0);
  }
}

TEST_CASE("budget") {
  SearchProblem sp = plain(special_pattern("bbs11"), 1, 8);
  sp.node_budget = 1000;
  const SearchResult r = solve(sp);
  CHECK(r.status == SearchStatus::BudgetExceeded);
  CHECK_FALSE(r.solution);
}

TEST_CASE("validation") {
  SearchProblem sp = plain(ZeroPattern::full(3), 5, 4);
  CHECK_THROWS_AS(solve(sp), InvalidArgument);
  sp = plain(ZeroPattern::full(3), 1, 5);
  sp.trace_target = 1;
  CHECK_THROWS_AS(solve(sp), InvalidArgument);
  sp.symmetric = true;
  sp.trace_target = 2;
  CHECK_THROWS_AS(solve(sp), InvalidArgument);
  sp.trace_target = 5;
  CHECK_THROWS_AS(solve(sp), InvalidArgument);
  sp = plain(ZeroPattern::from_strings({"11", "01"}), 1, 5);
  sp.symmetric = true;
  CHECK_THROWS_AS(solve(sp), InvalidArgument);
  sp = plain(ZeroPattern::identity(3), 1, 5);
  sp.require_indecomposable = true;
  CHECK_THROWS_AS(solve(sp), InvalidArgument);
  CHECK_THROWS_AS(minimal_denominator(plain(ZeroPattern::full(2), 1, 1), 0), InvalidArgument);
  CHECK(parse_row_order("natural") == RowOrder::Natural);
  CHECK_THROWS_AS(parse_row_order("random"), InvalidArgument);
  CHECK(parse_mode("enumerate-all") == SearchMode::EnumerateAll);
}

TEST_CASE("plain enumeration matches the brute-force count") {
  std::mt19937_64 rng(41);
  int nonzero = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 3;
    const ZeroPattern p = oracle::random_pattern(n, rng, 0.7);
    const long long dmax = n == 4 ? 5 : 9;
    for (long long d = 1; d <= dmax; ++d) {
      CAPTURE(p.to_string());
      CAPTURE(d);
      const std::uint64_t raw = oracle::count_orthogonal(p, d);
      const std::uint64_t scale = std::uint64_t{1} << (n - 1 + p.row_sum(0));
      const std::uint64_t with_tails = normalized_count(p, d, true);
      CHECK(with_tails * scale == raw);
      CHECK(normalized_count(p, d, false) == with_tails);
      if (raw) ++nonzero;
    }
  }
  CHECK(nonzero > 20);
}

TEST_CASE("symmetric enumeration matches the brute-force count") {
  std::mt19937_64 rng(42);
  int nonzero = 0;
  for (int trial = 0; trial < 90; ++trial) {
    const int n = 2 + trial % 3;
    const ZeroPattern p = oracle::random_symmetric_pattern(n, rng, 0.75);
    const int deg0 = p.row_sum(0) - (p(0, 0) ? 1 : 0);
    const long long dmax = n == 4 ? 5 : 9;
    for (long long d = 1; d <= dmax; ++d)
      for (long long t = -n; t <= n; ++t) {
        CAPTURE(p.to_string());
        CAPTURE(d);
        CAPTURE(t);
        const std::uint64_t raw = oracle::count_symmetric(p, d, t);
        const std::uint64_t with_tails = normalized_count(p, d, true, t);
        CHECK(with_tails * (std::uint64_t{1} << deg0) == raw);
        CHECK(normalized_count(p, d, false, t) == with_tails);
        if (raw) ++nonzero;
      }
  }
  CHECK(nonzero > 20);
}

TEST_CASE("sign normalization loses no realizable class") {
  for (int n = 1; n <= 3; ++n)
    for (const ZeroPattern& p : class_representatives(n)) {
      CAPTURE(p.to_string());
      SearchProblem sp = plain(p, 1, 25);
      sp.use_obstructions = false;
      sp.mode = SearchMode::EnumerateAll;
      sp.exec = Execution::serial();
      const SearchResult r = solve(sp);
      std::uint64_t raw = 0;
      long long first = 0;
      for (long long d = 1; d <= 25; ++d) {
        const std::uint64_t c = oracle::count_orthogonal(p, d);
        if (c && !first) first = d;
        raw += c;
      }
      CHECK((r.status == SearchStatus::Found) == (raw > 0));
      if (first) CHECK(*r.denominator == first);
    }
}

TEST_CASE("solutions satisfy every constraint") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    const bool sym = trial % 2 == 1;
    const ZeroPattern p = sym ? oracle::random_symmetric_pattern(n, rng, 0.8) : oracle::random_pattern(n, rng, 0.8);
    SearchProblem sp = plain(p, 1, 12);
    sp.symmetric = sym;
    const SearchResult r = solve(sp);
    if (r.status != SearchStatus::Found) continue;
    CHECK(is_orthogonal(*r.solution));
    CHECK(support(*r.solution) == p);
    if (sym) CHECK(is_symmetric(*r.solution));
  }
}

TEST_CASE("deterministic across worker counts and row orders") {
  for (const char* ref : {"@n=4,k=3", "@n=4,k=6", "@n=5,k=13", "@n=5,k=1"}) {
    CAPTURE(ref);
    const CatalogEntry& e = find_entry(catalog(), ref);
    const long long d = e.matrix.den().get_si();
    SearchProblem sp = plain(support(e.matrix), d, d);
    sp.exec = Execution::serial();
    const SearchResult serial = solve(sp);
    REQUIRE(serial.status == SearchStatus::Found);
    for (int w : {1, 2, 4}) {
      sp.exec = Execution::parallel(w);
      const SearchResult par = solve(sp);
      CHECK(par.status == SearchStatus::Found);
      CHECK(*par.solution == *serial.solution);
    }
    sp.exec = Execution::parallel(3);
    sp.mode = SearchMode::EnumerateAll;
    const std::uint64_t count = solve(sp).solutions;
    sp.exec = Execution::serial();
    CHECK(solve(sp).solutions == count);
    for (RowOrder order : {RowOrder::DescendingSupport, RowOrder::Natural}) {
      sp.row_order = order;
      sp.mode = SearchMode::FirstSolution;
      CHECK(solve(sp).status == SearchStatus::Found);
    }
  }
}

TEST_CASE("progress callback") {
  std::vector<SearchProgress> seen;
  SearchProblem sp = plain(ZeroPattern::full(3), 1, 3);
  sp.progress = [&](const SearchProgress& pr) { seen.push_back(pr); };
  const SearchResult r = solve(sp);
  CHECK(r.status == SearchStatus::Found);
  REQUIRE(seen.size() == 3);
  CHECK(seen[2].d == 3);
  CHECK(seen[2].solutions >= 1);
}

}
