#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "misinfo/error.hpp"
#include "misinfo/experiments.hpp"
#include "misinfo/json_io.hpp"
#include "misinfo/reports.hpp"
#include "oracles.hpp"
#include "running_example.hpp"

using namespace misinfo;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

ErrorKind kind_of(const std::string& text) {
  try {
    parse_misinfo_json(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a parse failure");
  return ErrorKind::Io;
}

std::string message_of(const std::string& text) {
  try {
    parse_misinfo_json(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("the bundled running example parses to the fixture") {
  auto mg = parse_misinfo_json(slurp(MISINFO_SOURCE_DIR "/data/table1.json"));
  CHECK(mg == example::root());
}

TEST_CASE("round trip is exact") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    auto mg = oracle::random_misinfo(rng, t % 2 ? std::vector<std::size_t>{3, 2} : std::vector<std::size_t>{2, 2, 2});
    mg.actual.set_payoff(0, 0, Rational(static_cast<long>(rng() % 7) - 3, 7));
    auto text = emit_misinfo_json(mg);
    CHECK(parse_misinfo_json(text) == mg);
    CHECK(emit_misinfo_json(parse_misinfo_json(text)) == text);
  }
  auto g = NormalFormGame::bimatrix({{{Rational(1, 3), 2}, {0, -1}}, {{5, 5}, {Rational(-7, 2), 0}}});
  CHECK(parse_game_json(emit_game_json(g)) == g);
}

TEST_CASE("rationals accept integers and p/q strings") {
  auto g = parse_game_json(R"({"players":1,"strategies":[2],"payoffs":[["3/6"],[-2]]})");
  CHECK(g.payoff(0, 0) == Rational(1, 2));
  CHECK(g.payoff(1, 0) == Rational(-2));
}

TEST_CASE("schema violations name the offending field") {
  CHECK(kind_of(R"({"actual":{"players":1,"strategies":[1],"payoffs":[[0]]}})") == ErrorKind::Schema);
  CHECK(message_of(R"({"actual":{"players":1,"strategies":[1],"payoffs":[[0]]}})").find("subjective") !=
        std::string::npos);
  std::string zero_den =
      R"({"actual":{"players":1,"strategies":[1],"payoffs":[["1/0"]]},"subjective":[{"players":1,"strategies":[1],"payoffs":[[0]]}]})";
  CHECK(kind_of(zero_den) == ErrorKind::Parse);
  CHECK(message_of(zero_den).find("$.actual.payoffs[0][0]") != std::string::npos);
  std::string short_row =
      R"({"actual":{"players":2,"strategies":[2,2],"payoffs":[[[1,1],[1,1]],[[1,1]]]},"subjective":[]})";
  CHECK(message_of(short_row).find("$.actual.payoffs[1]") != std::string::npos);
  CHECK(kind_of("{not json") == ErrorKind::Parse);
  CHECK(kind_of(R"({"actual":{"players":0,"strategies":[],"payoffs":[]},"subjective":[]})") == ErrorKind::Schema);
  CHECK(kind_of(R"({"actual":{"players":1,"strategies":[1],"payoffs":[[true]]},"subjective":[]})") ==
        ErrorKind::Schema);
}

TEST_CASE("reports carry version and configuration") {
  RunConfig cfg;
  cfg.index_base = 1;
  auto j = adapt_report(example::root(), cfg);
  CHECK(j["version"] == version());
  CHECK(j["config"]["index_base"] == 1);
  CHECK_FALSE(j["config"].contains("threads"));
  CHECK(j["lad"] == 2);
  CHECK(j["unique_mgs"] == 4);
  CHECK(j["naive_nodes"] == 10);
  CHECK(j["smes"] == Json::parse(R"([[["0","1"],["1","0"]]])"));
  RunConfig par = cfg;
  par.threads = 4;
  CHECK(dump_report(adapt_report(example::root(), par)) == dump_report(j));
}

TEST_CASE("nme report gives exact welfare metrics") {
  auto j = nme_report(example::root(), RunConfig{});
  CHECK(j["price_of_misinformation"] == "24/11");
  CHECK(j["price_of_anarchy"] == "3/2");
  CHECK(j["characteristic_set"] == Json::parse("[[1,0],[1,1]]"));
}

TEST_CASE("undefined metrics are null with a reason") {
  auto pennies = NormalFormGame::bimatrix({{{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}});
  auto j = solve_report(pennies, RunConfig{});
  CHECK(j["price_of_anarchy"].is_null());
  CHECK(j.contains("price_of_anarchy_error"));
}

TEST_CASE("experiment report excludes failures from the means") {
  Setting s = Setting::parse("2x2");
  s.runs = 20;
  s.seed = 4;
  auto table = monte_carlo(s);
  auto j = experiment_report(table, RunConfig{});
  CHECK(j["completed"].get<std::size_t>() + j["failures"].get<std::size_t>() == 20);
  CHECK(j["failed_runs"].size() == j["failures"].get<std::size_t>());
  CHECK(j["sp"] == "16");
}

}  // TEST_SUITE
