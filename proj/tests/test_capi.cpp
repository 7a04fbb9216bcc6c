#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <thread>

#include "misinfo.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  mi_string_free(s);
  return out;
}

const std::string kTable1 = slurp(MISINFO_SOURCE_DIR "/data/table1.json");

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version and options") {
  CHECK(std::string(mi_version()) == "0.3.0");
  mi_options* o = mi_options_new();
  REQUIRE(o);
  CHECK(mi_options_set_threads(o, 0) == MI_ERR_INVALID_ARGUMENT);
  CHECK(std::string(mi_last_error()).size() > 0);
  CHECK(mi_options_set_threads(o, 2) == MI_OK);
  CHECK(mi_options_set_tolerance(o, -1.0) == MI_ERR_INVALID_ARGUMENT);
  CHECK(mi_options_set_index_base(o, 2) == MI_ERR_INVALID_ARGUMENT);
  CHECK(mi_options_set_threads(nullptr, 1) == MI_ERR_INVALID_ARGUMENT);
  mi_options_free(o);
  mi_options_free(nullptr);
}

TEST_CASE("adapt through the C interface") {
  mi_misinfo* mg = nullptr;
  REQUIRE(mi_misinfo_from_json(kTable1.c_str(), &mg) == MI_OK);
  CHECK(mi_misinfo_is_canonical(mg) == 1);
  mi_options* o = mi_options_new();
  char* out = nullptr;
  REQUIRE(mi_adapt(mg, o, &out) == MI_OK);
  std::string report = take(out);
  CHECK(report.find("\"lad\": 2") != std::string::npos);
  CHECK(report.find("\"unique_mgs\": 4") != std::string::npos);

  mi_options_set_threads(o, 4);
  REQUIRE(mi_adapt(mg, o, &out) == MI_OK);
  CHECK(take(out) == report);

  REQUIRE(mi_export_dot(mg, o, 1, &out) == MI_OK);
  CHECK(take(out).rfind("digraph", 0) == 0);
  REQUIRE(mi_one_sme(mg, o, &out) == MI_OK);
  CHECK(take(out).find("\"updates\": 1") != std::string::npos);
  REQUIRE(mi_misinfo_to_json(mg, &out) == MI_OK);
  std::string round = take(out);
  mi_misinfo* again = nullptr;
  REQUIRE(mi_misinfo_from_json(round.c_str(), &again) == MI_OK);
  REQUIRE(mi_misinfo_to_json(again, &out) == MI_OK);
  CHECK(take(out) == round);
  mi_misinfo_free(again);
  mi_misinfo_free(mg);
  mi_options_free(o);
}

TEST_CASE("status codes follow the error class") {
  mi_misinfo* mg = nullptr;
  CHECK(mi_misinfo_from_json("{oops", &mg) == MI_ERR_PARSE);
  CHECK(mg == nullptr);
  CHECK(std::string(mi_last_error()).find("malformed") != std::string::npos);
  CHECK(mi_misinfo_from_json(R"({"actual":{"players":1,"strategies":[1],"payoffs":[[0]]}})", &mg) == MI_ERR_PARSE);
  CHECK(mi_misinfo_from_json(nullptr, &mg) == MI_ERR_INVALID_ARGUMENT);

  const char* degenerate =
      R"({"actual":{"players":2,"strategies":[2,2],"payoffs":[[[-6,8],[-8,-2]],[[-7,5],[4,5]]]},
          "subjective":[{"players":2,"strategies":[2,2],"payoffs":[[[-6,8],[-8,-2]],[[-7,5],[4,5]]]},
                        {"players":2,"strategies":[2,2],"payoffs":[[[-6,8],[-8,-2]],[[-7,5],[4,5]]]}]})";
  REQUIRE(mi_misinfo_from_json(degenerate, &mg) == MI_OK);
  char* out = nullptr;
  CHECK(mi_adapt(mg, nullptr, &out) == MI_ERR_DOMAIN);
  CHECK(out == nullptr);
  mi_options* o = mi_options_new();
  mi_options_set_allow_degenerate(o, 1);
  CHECK(mi_adapt(mg, o, &out) == MI_OK);
  mi_string_free(out);
  mi_options_free(o);
  mi_misinfo_free(mg);
}

TEST_CASE("last error is per thread") {
  mi_misinfo* mg = nullptr;
  CHECK(mi_misinfo_from_json("{oops", &mg) == MI_ERR_PARSE);
  std::string other;
  std::thread([&] { other = mi_last_error(); }).join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(mi_last_error()).empty());
}

TEST_CASE("game level calls") {
  mi_game* g = nullptr;
  REQUIRE(mi_game_from_json(R"({"players":2,"strategies":[2,2],"payoffs":[[[1,-1],[-1,1]],[[-1,1],[1,-1]]]})", &g) ==
          MI_OK);
  CHECK(mi_game_num_players(g) == 2);
  char* out = nullptr;
  REQUIRE(mi_solve(g, nullptr, &out) == MI_OK);
  CHECK(take(out).find("\"1/2\"") != std::string::npos);
  size_t counts[] = {3, 2, 1};
  mi_game* big = nullptr;
  REQUIRE(mi_inflate(g, 3, counts, 3, &big) == MI_OK);
  CHECK(mi_game_num_players(big) == 3);
  CHECK(mi_inflate(g, 1, counts, 1, &big) == MI_ERR_INVALID_ARGUMENT);
  mi_game_free(big);
  mi_game_free(g);
}

TEST_CASE("canonicalize and experiment") {
  const char* ragged =
      R"({"actual":{"players":2,"strategies":[2,2],"payoffs":[[[1,1],[0,0]],[[0,0],[1,1]]]},
          "subjective":[{"players":2,"strategies":[3,2],"payoffs":[[[1,1],[0,0]],[[0,0],[1,1]],[[2,2],[2,0]]]},
                        {"players":2,"strategies":[2,2],"payoffs":[[[1,1],[0,0]],[[0,0],[1,1]]]}]})";
  mi_misinfo* mg = nullptr;
  REQUIRE(mi_misinfo_from_json(ragged, &mg) == MI_OK);
  CHECK(mi_misinfo_is_canonical(mg) == 0);
  char* out = nullptr;
  CHECK(mi_nme(mg, nullptr, &out) == MI_ERR_DOMAIN);
  mi_misinfo* canon = nullptr;
  REQUIRE(mi_canonicalize(mg, &canon) == MI_OK);
  CHECK(mi_misinfo_is_canonical(canon) == 1);
  mi_misinfo_free(canon);
  mi_misinfo_free(mg);

  mi_options* o = mi_options_new();
  mi_options_set_seed(o, 8);
  REQUIRE(mi_experiment("2x2", 5, -10, 10, o, 1, &out) == MI_OK);
  std::string a = take(out);
  REQUIRE(mi_experiment("2x2", 5, -10, 10, o, 1, &out) == MI_OK);
  CHECK(take(out) == a);
  CHECK(mi_experiment("2y2", 5, -10, 10, o, 0, &out) == MI_ERR_PARSE);
  CHECK(mi_experiment("2x2", 5, -10, 10, o, 7, &out) == MI_ERR_INVALID_ARGUMENT);
  mi_options_free(o);

  REQUIRE(mi_adversarial("3x2", &mg) == MI_OK);
  REQUIRE(mi_adapt(mg, nullptr, &out) == MI_OK);
  CHECK(take(out).find("\"lad\": 6") != std::string::npos);
  mi_misinfo_free(mg);
}

}  // TEST_SUITE
