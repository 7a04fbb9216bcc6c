#include <doctest.h>

#include <random>

#include "misinfo/error.hpp"
#include "misinfo/misinfo_game.hpp"
#include "misinfo/welfare.hpp"
#include "oracles.hpp"
#include "running_example.hpp"

using namespace misinfo;

namespace {

Rational q(long n, long d) { return Rational(n, d); }

}  // namespace

TEST_SUITE("misinfo") {

TEST_CASE("canonical games share one shape") {
  CHECK(is_canonical(example::root()));
  MisinformationGame wrong = example::root();
  wrong.subjective[1] = NormalFormGame::filled({2, 3}, Rational(0));
  CHECK_FALSE(is_canonical(wrong));
  CHECK_THROWS_AS(update_cell(wrong, 0), Error);
  CHECK_THROWS_AS(nme(wrong), Error);
  MisinformationGame short_views{example::actual(), {example::view1()}};
  CHECK_FALSE(is_canonical(short_views));
}

TEST_CASE("inflation process pads every game to the per-player maximum") {
  // Player 2 believes in an extra strategy and a third player.
  MisinformationGame mg{example::actual(),
                        {NormalFormGame::filled({3, 2}, Rational(1)), NormalFormGame::filled({2, 3, 2}, Rational(2))}};
  auto c = inflation_process(mg);
  CHECK(is_canonical(c));
  CHECK(c.subjective.size() == 3);
  CHECK(c.actual.strategy_counts() == std::vector<std::size_t>{3, 3, 2});
  // Original payoffs survive at their positions.
  CHECK(c.actual.payoff({1, 0, 0}, 0) == Rational(7));
  CHECK(c.actual.payoff({1, 0, 0}, 2) == Rational(0));
  // A non-square shape is kept as is.
  MisinformationGame rect{NormalFormGame::filled({3, 2}, Rational(0)),
                          {NormalFormGame::filled({3, 2}, Rational(0)), NormalFormGame::filled({3, 2}, Rational(0))}};
  CHECK(inflation_process(rect) == rect);
  CHECK_THROWS_AS(inflation_process(MisinformationGame{example::actual(), {example::view1()}}), Error);
}

TEST_CASE("updates rewrite every view at the learned position") {
  auto mg = example::root();
  CHECK(update(mg, {1, 0}) == example::learned_bottom_left());
  CHECK(update(mg, {1, 1}) == example::learned_bottom_right());
  CHECK(update_set(mg, example::bottom_row()) == example::learned_bottom_row());
  CHECK(update(mg, {1, 0}) == oracle::naive_update(mg, {1, 0}));
  CHECK(update_changes(mg, 2));
  CHECK_FALSE(update_changes(example::learned_bottom_left(), 2));
  CHECK_THROWS_AS(update_cell(mg, 4), Error);
}

TEST_CASE("update algebra on random games") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    auto mg = oracle::random_misinfo(rng, t % 2 ? std::vector<std::size_t>{3, 2} : std::vector<std::size_t>{2, 2, 2});
    std::size_t u = rng() % mg.num_positions(), v = rng() % mg.num_positions();
    auto pu = mg.actual.position(u), pv = mg.actual.position(v);
    CHECK(update(update(mg, pu), pu) == update(mg, pu));
    CHECK(update(update(mg, pu), pv) == update(update(mg, pv), pu));
    CHECK(update(mg, pu) == oracle::naive_update(mg, pu));
    CHECK(update_set(mg, PositionSet::from_cells({u, v})) == update(update(mg, pu), pv));
  }
}

TEST_CASE("mg_equal rejects different shapes") {
  auto a = example::root();
  MisinformationGame b{NormalFormGame::filled({3, 2}, Rational(0)),
                       {NormalFormGame::filled({3, 2}, Rational(0)), NormalFormGame::filled({3, 2}, Rational(0))}};
  CHECK_THROWS_AS(mg_equal(a, b), Error);
  CHECK(mg_equal(a, example::root()));
  CHECK_FALSE(mg_equal(a, example::learned_bottom_left()));
}

TEST_CASE("natural misinformed equilibrium of the running example") {
  auto profiles = nme(example::root());
  REQUIRE(profiles.size() == 1);
  CHECK(profiles[0] == StrategyProfile::exact({{0, 1}, {q(1, 2), q(1, 2)}}));
  CHECK(characteristic_cells(example::actual(), profiles) == std::vector<std::size_t>{2, 3});

  auto after_br = nme(example::learned_bottom_right());
  REQUIRE(after_br.size() == 1);
  CHECK(after_br[0] == StrategyProfile::exact({{0, 1}, {q(1, 3), q(2, 3)}}));
  auto after_row = nme(example::learned_bottom_row());
  REQUIRE(after_row.size() == 1);
  CHECK(after_row[0] == StrategyProfile::pure({2, 2}, {1, 0}));
}

TEST_CASE("price of misinformation matches the brute-force oracle") {
  auto mg = example::root();
  auto profiles = nme(mg);
  Rational worst = oracle::welfare(mg.actual, profiles[0]);
  for (const auto& p : profiles) worst = std::min(worst, oracle::welfare(mg.actual, p));
  CHECK(worst == q(11, 2));
  Rational want = oracle::social_optimum(mg.actual) / worst;
  CHECK(price_of_misinformation(mg).exact() == want);
  CHECK(want == q(24, 11));
}

TEST_CASE("nme combines per-player components lexicographically") {
  // Player 1 sees a coordination game, player 2 a dominant-strategy game.
  auto coord = NormalFormGame::bimatrix({{{2, 2}, {0, 0}}, {{0, 0}, {1, 1}}});
  auto dom = NormalFormGame::bimatrix({{{0, 1}, {0, 0}}, {{0, 1}, {0, 0}}});
  MisinformationGame mg{coord, {coord, dom}};
  SolverOptions o;
  o.allow_degenerate = true;  // player 2's view leaves player 1 indifferent
  auto ps = nme(mg, o);
  // Player 1: s1, s2 and the (1/3, 2/3) mix. Player 2: always s1.
  REQUIRE(ps.size() == 3);
  for (const auto& p : ps) CHECK(p[1] == MixedStrategy::pure(2, 0));
  CHECK(std::is_sorted(ps.begin(), ps.end()));
  CHECK_THROWS_AS(nme(mg), Error);
}

TEST_CASE("stable hash is fixed for a fixed game") {
  auto h = stable_hash(example::root());
  CHECK(h.size() == 16);
  CHECK(h == stable_hash(example::root()));
  CHECK(h != stable_hash(example::learned_bottom_left()));
}

TEST_CASE("position sets are sorted and duplicate-free") {
  auto s = PositionSet::from_cells({3, 1, 3});
  CHECK(s.cells() == std::vector<std::size_t>{1, 3});
  CHECK(s.with(2).cells() == std::vector<std::size_t>{1, 2, 3});
  CHECK(s.with(3) == s);
  CHECK(s.str(example::actual(), 1) == "{(1,2),(2,2)}");
}

}  // TEST_SUITE
