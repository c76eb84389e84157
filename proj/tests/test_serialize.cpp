#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orthopat/constructions.hpp"
#include "orthopat/serialize.hpp"

using namespace orthopat;

TEST_SUITE("serialize") {

TEST_CASE("matrix json") {
  const RatMatrix x = RatMatrix::from_integers(3, 25, {16, 12, 15, 12, 9, -20, 15, -20, 0});
  const Json j = x;
  CHECK(j.dump() == R"({"n":3,"den":"25","num":[["16","12","15"],["12","9","-20"],["15","-20","0"]]})");
  CHECK(j.get<RatMatrix>() == x);

  const RatMatrix big = conference_orthogonal(5) * symmetric_full_support(26, 24).scaled(make_rat(Int(1), Int(7)));
  CHECK(Json::parse(Json(big).dump()).get<RatMatrix>() == big);

  CHECK_THROWS_AS(Json::parse(R"({"n":2,"den":"5","num":[["3","4"]]})").get<RatMatrix>(), ParseError);
  CHECK_THROWS_AS(Json::parse(R"({"n":1,"den":"0","num":[["1"]]})").get<RatMatrix>(), ParseError);
  CHECK_THROWS_AS(Json::parse(R"({"n":1,"den":"x","num":[["1"]]})").get<RatMatrix>(), ParseError);
  CHECK_THROWS_AS(Json::parse(R"({"n":1,"num":[["1"]]})").get<RatMatrix>(), ParseError);
  // unnormalized input is reduced
  CHECK(Json::parse(R"({"n":1,"den":"4","num":[["2"]]})").get<RatMatrix>().den() == 2);
}

TEST_CASE("pattern json") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const ZeroPattern p = oracle::random_pattern(1 + trial % 8, rng);
    CHECK(Json::parse(Json(p).dump()).get<ZeroPattern>() == p);
  }
  CHECK(Json(ZeroPattern::identity(2)).dump() == R"({"n":2,"rows":["10","01"]})");
  CHECK_THROWS_AS(Json::parse(R"({"n":3,"rows":["10","01"]})").get<ZeroPattern>(), ParseError);
  CHECK_THROWS_AS(Json::parse(R"({"rows":["10","0"]})").get<ZeroPattern>(), ParseError);
}

TEST_CASE("obstruction json") {
  ObstructionReport r;
  r.verdict = Verdict::Infeasible;
  r.reason = ObstructionReason::ColumnDependence;
  r.witness = ObstructionWitness{{0, 1}, {2, 3, 4}, false};
  const Json j = r;
  CHECK(j.dump() ==
        R"({"verdict":"infeasible","reason":"column-dependence","witness":{"columns":[1,2],"rows":[3,4,5],"dependent_rows":false}})");
  const ObstructionReport back = j.get<ObstructionReport>();
  CHECK(back.verdict == r.verdict);
  CHECK(back.reason == r.reason);
  REQUIRE(back.witness);
  CHECK(back.witness->columns == r.witness->columns);
  CHECK(back.witness->rows == r.witness->rows);

  const ObstructionReport unknown;
  const Json ju = unknown;
  CHECK(ju["witness"].is_null());
  CHECK_FALSE(ju.get<ObstructionReport>().witness);
  CHECK_THROWS_AS(Json::parse(R"({"verdict":"maybe","reason":"none","witness":null})").get<ObstructionReport>(),
                  ParseError);
}

TEST_CASE("search result json") {
  SearchResult r;
  r.status = SearchStatus::Found;
  r.denominator = 5;
  r.solution = RatMatrix::from_integers(2, 5, {3, 4, 4, -3});
  r.nodes_explored = 17;
  r.solutions = 1;
  r.exhausted_through = 4;
  const Json j = r;
  const SearchResult back = Json::parse(j.dump()).get<SearchResult>();
  CHECK(back.status == r.status);
  CHECK(back.denominator == r.denominator);
  CHECK(*back.solution == *r.solution);
  CHECK(back.nodes_explored == 17);
  CHECK(back.solutions == 1);
  CHECK(back.exhausted_through == 4);
  CHECK(Json(back).dump() == j.dump());
  CHECK_FALSE(j.contains("elapsed"));

  const SearchResult empty;
  const SearchResult eback = Json(empty).get<SearchResult>();
  CHECK(eback.status == SearchStatus::Exhausted);
  CHECK_FALSE(eback.solution);
  CHECK_FALSE(eback.denominator);
}

}
