#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orthopat/catalog.hpp"
#include "orthopat/obstructions.hpp"

using namespace orthopat;

namespace {

Grid grid(std::vector<std::string> rows) {
  Grid g;
  g.cols = static_cast<int>(rows.front().size());
  for (const std::string& r : rows) {
    RowMask m = 0;
    for (int j = 0; j < g.cols; ++j)
      if (r[j] == '1') m |= RowMask{1} << j;
    g.rows.push_back(m);
  }
  return g;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = load_catalog();
  return entries;
}

}  // namespace

TEST_SUITE("obstructions") {

TEST_CASE("forced rank") {
  CHECK(forced_rank_lower_bound(grid({"01", "10", "11"})) == 2);
  CHECK(forced_rank_lower_bound(grid({"11", "11"})) == 1);
  CHECK(forced_rank_lower_bound(grid({"000", "000", "000"})) == 0);
  CHECK(forced_rank_lower_bound(ZeroPattern::identity(5)) == 5);
  CHECK(count_perfect_matchings(grid({"11", "11"}), 10) == 2);
  CHECK(count_perfect_matchings(Grid::of(ZeroPattern::full(4)), 100) == 24);
  CHECK(count_perfect_matchings(Grid::of(ZeroPattern::full(4)), 2) == 2);
}

TEST_CASE("forced rank never exceeds structural rank") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 1 + trial % 6;
    const ZeroPattern p = oracle::random_pattern(n, rng, 0.2 + 0.1 * (trial % 6));
    CHECK(forced_rank_lower_bound(p) <= oracle::structural_rank(p));
  }
}

TEST_CASE("column dependence on the three infeasible patterns") {
  for (const char* name : {"p14", "p15", "p16"}) {
    CAPTURE(name);
    const ObstructionReport r = column_dependence_infeasible(special_pattern(name));
    CHECK(r.infeasible());
    CHECK(r.reason == ObstructionReason::ColumnDependence);
    CHECK(r.witness.has_value());
  }
  const ObstructionReport r16 = column_dependence_infeasible(special_pattern("p16"));
  REQUIRE(r16.witness);
  CHECK(r16.witness->columns == std::vector<int>{0, 1});
  CHECK(r16.witness->rows == std::vector<int>{2, 3, 4});
}

TEST_CASE("catalog supports are never flagged") {
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.label());
    const ZeroPattern p = support(e.matrix);
    const ObstructionReport r = column_dependence_infeasible(p);
    CHECK_FALSE(r.infeasible());
    CHECK_FALSE(r.witness.has_value());
    if (e.symmetric_list) CHECK_FALSE(trace_feasibility(p, e.n, *e.trace_label).infeasible());
  }
  CHECK_FALSE(column_dependence_infeasible(support(find_entry(catalog(), "@n=5,k=13").matrix)).infeasible());
}

TEST_CASE("transpose symmetry and serial/parallel agreement") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 4;
    const ZeroPattern p = oracle::random_pattern(n, rng, 0.55 + 0.05 * (trial % 5));
    const ObstructionReport a = column_dependence_infeasible(p);
    CHECK(a.verdict == column_dependence_infeasible(p.transpose()).verdict);
    const ObstructionReport b = column_dependence_infeasible(p, Execution::parallel(3));
    CHECK(a.verdict == b.verdict);
    CHECK(a.witness.has_value() == b.witness.has_value());
    if (a.witness && b.witness) {
      CHECK(a.witness->columns == b.witness->columns);
      CHECK(a.witness->rows == b.witness->rows);
    }
  }
}

TEST_CASE("trace parity and range") {
  const ZeroPattern j4 = ZeroPattern::full(4);
  for (long long t = -6; t <= 6; ++t) {
    const ObstructionReport r = trace_feasibility(j4, 4, t);
    if (t % 2 != 0 || t < -4 || t > 4) {
      CHECK(r.infeasible());
      CHECK(r.reason == ObstructionReason::TraceParity);
      CHECK(r.witness.has_value());
    } else {
      CHECK_FALSE(r.infeasible());
      CHECK(r.reason == ObstructionReason::None);
    }
  }
  CHECK_THROWS_AS(trace_feasibility(ZeroPattern::from_strings({"11", "01"}), 2, 0), InvalidArgument);
  CHECK_THROWS_AS(trace_feasibility(j4, 5, 1), InvalidArgument);
}

TEST_CASE("trace n-2 rule") {
  const auto rep = symmetric_representative(support(find_entry(catalog(), "@n=5,k=4").matrix));
  REQUIRE(rep.has_value());
  CHECK(is_indecomposable(*rep));
  for (long long t : {3LL, -3LL}) {
    const ObstructionReport r = trace_feasibility(*rep, 5, t);
    CHECK(r.infeasible());
    CHECK(r.reason == ObstructionReason::TraceNMinus2);
    REQUIRE(r.witness);
    const int i = r.witness->rows.at(0);
    const int j = r.witness->columns.at(0);
    CHECK(i != j);
    CHECK_FALSE((*rep)(i, j));
  }
  CHECK_FALSE(trace_feasibility(*rep, 5, 1).infeasible());
  CHECK_FALSE(trace_feasibility(ZeroPattern::full(5), 5, 3).infeasible());
  // decomposable patterns are outside the rule
  CHECK_FALSE(trace_feasibility(ZeroPattern::identity(3), 3, 1).infeasible());
}

TEST_CASE("names") {
  CHECK(verdict_name(Verdict::Infeasible) == "infeasible");
  CHECK(reason_name(ObstructionReason::ColumnDependence) == "column-dependence");
  CHECK(reason_name(ObstructionReason::TraceParity) == "trace-parity");
  CHECK(reason_name(ObstructionReason::TraceNMinus2) == "trace-n-minus-2");
}

}
