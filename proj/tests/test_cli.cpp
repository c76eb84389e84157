#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "orthopat/serialize.hpp"

using namespace orthopat;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify-catalog") {
  const Run r = run({"verify-catalog"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all entries pass") != std::string::npos);
  const Run j = run({"verify-catalog", "--json"});
  CHECK(j.code == 0);
  const Json parsed = Json::parse(j.out);
  CHECK(parsed["passed"] == true);
  CHECK(parsed["plain_entries"] == 51);
  CHECK(run({"--json", "verify-catalog"}).out == j.out);
}

TEST_CASE("enumerate") {
  const Run r = run({"enumerate", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# n=4: 8 classes\n", 0) == 0);
  std::size_t classes = 0;
  for (std::size_t at = r.out.find("# class "); at != std::string::npos; at = r.out.find("# class ", at + 1)) ++classes;
  CHECK(classes == 8);
  CHECK(run({"enumerate", "--n", "4", "--workers", "3"}).out == r.out);
  const Json j = Json::parse(run({"enumerate", "--n", "4", "--json"}).out);
  CHECK(j["count"] == 8);
  CHECK(j["classes"].size() == 8);
  CHECK(j["classes"][0].get<ZeroPattern>().n() == 4);
}

TEST_CASE("search") {
  const Run r = run({"search", "@n=5,k=14"});
  CHECK(r.code == 0);
  CHECK(r.out.find("status: obstructed") != std::string::npos);
  CHECK(r.out.find("column-dependence") != std::string::npos);

  const Run m = run({"search", "@n=3,k=1", "--prove-minimal"});
  CHECK(m.code == 0);
  CHECK(m.out.find("denominator: 25") != std::string::npos);
  CHECK(m.out.find("exhausted through: 24") != std::string::npos);

  const Run s = run({"search", "@n=4,k=8,t=0", "--symmetric", "--trace", "0", "--json"});
  CHECK(s.code == 0);
  const Json j = Json::parse(s.out);
  const SearchResult sr = j.get<SearchResult>();
  CHECK(sr.status == SearchStatus::Found);
  CHECK(*sr.denominator == 2);
  CHECK(is_symmetric(*sr.solution));
  CHECK(j["obstruction"].is_null());

  // determinism, including across worker counts
  const Run a = run({"search", "@n=4,k=3", "--json"});
  CHECK(run({"search", "@n=4,k=3", "--json"}).out == a.out);
  CHECK(run({"search", "@n=4,k=3", "--json", "--workers", "1"}).out == a.out);

  const Run logged = run({"search", "@n=2,k=1", "--log"});
  CHECK(logged.err.find("d=5") != std::string::npos);
  CHECK(logged.out == run({"search", "@n=2,k=1"}).out);

  const std::filesystem::path f = temp_file("orthopat_cli_pattern.txt", "11\n11\n");
  CHECK(run({"search", f.string(), "--dmax", "5"}).out.find("denominator: 5") != std::string::npos);
  std::filesystem::remove(f);
}

TEST_CASE("check and classify") {
  const Run c = run({"check", "@p16", "--trace", "3"});
  CHECK(c.code == 0);
  CHECK(c.out.find("trace-n-minus-2") != std::string::npos);
  const Json j = Json::parse(run({"check", "@p14", "--json"}).out);
  CHECK(j.dump().find("column-dependence") != std::string::npos);

  const Run k = run({"classify", "@n=4,k=4"});
  CHECK(k.code == 0);
  const Json kj = Json::parse(run({"classify", "@n=4,k=4", "--json"}).out);
  REQUIRE(kj.size() == 1);
  CHECK(kj[0]["catalog_label"] == 4);
  CHECK(kj[0]["canonical_class"].get<ZeroPattern>() == canonical_class(resolve_pattern_reference("@n=4,k=4")));
}

TEST_CASE("construct") {
  const Run g = run({"construct", "grover", "--n", "3"});
  CHECK(g.code == 0);
  CHECK(parse_matrix(g.out) == RatMatrix::from_integers(3, 3, {1, -2, -2, -2, 1, -2, -2, -2, 1}));
  const Json hj = Json::parse(run({"construct", "hessenberg", "--n", "3", "--point", "4/5,3/5", "--json"}).out);
  CHECK(hj.get<RatMatrix>() == RatMatrix::from_integers(3, 25, {0, 15, 20, 15, 16, -12, 20, -12, 9}));
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"construct", "full-support", "--n", "5", "--t", "1"},
           {"construct", "append", "--from", "@n=4,k=1,t=0", "--m", "6"},
           {"construct", "paley", "--q", "9"},
           {"construct", "conference", "--m", "3"},
           {"construct", "zigzag", "--n", "6"},
           {"construct", "symmetric-maximal", "--n", "8"},
           {"construct", "hypercube", "--dim", "3"},
           {"construct", "hypercube", "--alphas", "3/5,4/5"},
           {"construct", "design8"},
       }) {
    CAPTURE(args[1]);
    const Run r = run(args);
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
    if (args[1] != "paley") CHECK(is_orthogonal(parse_matrix(r.out)));
  }
  CHECK(run({"construct", "paley", "--q", "4"}).code == 2);
  CHECK(run({"construct", "full-support", "--n", "4", "--t", "1"}).code == 2);
  CHECK(run({"construct", "hypercube", "--alphas", "1/2,1/2"}).code == 2);
}

TEST_CASE("problems") {
  const Run p1 = run({"problem1", "--n", "4"});
  CHECK(p1.code == 0);
  CHECK(p1.out.find("affirmative for every class") != std::string::npos);
  const Json j = Json::parse(run({"problem1", "--n", "4", "--json"}).out);
  CHECK(j["affirmative"] == true);
  const Run p2 = run({"problem2", "--dmax", "3"});
  CHECK(p2.code == 0);
  CHECK(p2.out.find("open5a") != std::string::npos);
  CHECK(p2.out.find("open5b") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate"}).code == 2);
  CHECK(run({"enumerate", "--n", "9"}).code == 2);
  CHECK(run({"search", "@n=3,k=1", "--trace", "1"}).code == 2);
  CHECK(run({"search", "@n=3,k=1", "--prove-minimal", "--enumerate"}).code == 2);
  CHECK(run({"search", "/nonexistent/pattern.txt"}).code == 2);
  CHECK(run({"search", "@n=9,k=1"}).code == 2);
  const Run bad = run({"search", "@n=3,k=1", "--row-order", "sideways"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("sideways") != std::string::npos);
  const std::filesystem::path f = temp_file("orthopat_cli_bad.txt", "12\n01\n");
  CHECK(run({"check", f.string()}).code == 2);
  std::filesystem::remove(f);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("data override makes verification fail") {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "orthopat_cli_data";
  std::filesystem::create_directories(dir);
  for (const char* f : {"symmetric.txt", "special.txt"})
    std::filesystem::copy_file(std::filesystem::path(ORTHOPAT_SOURCE_DIR "/data/catalog") / f, dir / f,
                               std::filesystem::copy_options::overwrite_existing);
  std::ofstream(dir / "plain.txt") << "@ n=2 k=1\n1/5\n 3  4\n 4  3\n";
  ::setenv("ORTHOPAT_DATA", dir.c_str(), 1);
  const Run r = run({"verify-catalog"});
  ::unsetenv("ORTHOPAT_DATA");
  std::filesystem::remove_all(dir);
  CHECK(r.code == 1);
  CHECK(r.out.find("entries fail") != std::string::npos);
}

}
