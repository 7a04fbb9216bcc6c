#include <doctest.h>

#include <random>

#include "misinfo/adaptation.hpp"
#include "misinfo/error.hpp"
#include "oracles.hpp"
#include "running_example.hpp"
#include "sampling.hpp"

using namespace misinfo;

namespace {

bool contains_game(const std::vector<MisinformationGame>& games, const MisinformationGame& g) {
  return std::any_of(games.begin(), games.end(), [&](const MisinformationGame& h) { return mg_equal(g, h); });
}

bool same_game_set(const std::vector<MisinformationGame>& a, const std::vector<MisinformationGame>& b) {
  return a.size() == b.size() && std::all_of(a.begin(), a.end(), [&](const auto& g) { return contains_game(b, g); });
}

// Closure of a set of games under one adaptation step.
std::vector<MisinformationGame> closure(std::vector<MisinformationGame> games) {
  while (true) {
    auto next = adapt_step(games);
    bool grew = false;
    for (auto& g : next)
      if (!contains_game(games, g)) {
        games.push_back(g);
        grew = true;
      }
    if (!grew) return games;
  }
}

}  // namespace

TEST_SUITE("adaptation") {

TEST_CASE("naive adaptation of the running example") {
  auto res = naive_adaptation(example::root());
  CHECK(res.lad == 2);
  CHECK(res.total_nodes == 10);
  std::vector<MisinformationGame> want{example::learned_bottom_left(), example::learned_bottom_right(),
                                       example::learned_bottom_row()};
  CHECK(same_game_set(res.stable_set, want));
  REQUIRE(res.steps.size() == 3);
  CHECK(same_game_set(res.steps[1], {example::learned_bottom_left(), example::learned_bottom_right()}));
}

TEST_CASE("traversal of the running example") {
  auto g = traverse(example::root());
  CHECK(g.stats.unique_mgs == 4);
  CHECK(g.stats.visited_sets == 4);
  CHECK(g.stats.terminal_games == 3);
  CHECK(g.stats.leaves == 3);
  std::set<PositionSet> terminal{example::bottom_left(), example::bottom_right(), example::bottom_row()};
  CHECK(g.terminal == terminal);
  CHECK(*g.node(example::bottom_row()).game == example::learned_bottom_row());

  auto view = loopless_view(g);
  CHECK(topological_order(view).has_value());
  CHECK(sources(view).size() == 1);
  CHECK(view.nodes[sources(view)[0]] == PositionSet());
  CHECK(longest_path(view) == 2);
  std::set<PositionSet> sink_sets;
  for (auto i : sinks(view)) sink_sets.insert(view.nodes[i]);
  CHECK(sink_sets == std::set<PositionSet>{example::bottom_left(), example::bottom_row()});

  auto smes = compute_sme(g);
  REQUIRE(smes.size() == 1);
  CHECK(smes[0] == StrategyProfile::pure({2, 2}, {1, 0}));
  CHECK(adaptation_procedure(example::root()) == smes);
}

TEST_CASE("one stable equilibrium along a single path") {
  auto one = find_one_sme(example::root());
  CHECK(one.profile == StrategyProfile::pure({2, 2}, {1, 0}));
  CHECK(one.updates == 1);
  CHECK(one.final_game == example::learned_bottom_left());
}

TEST_CASE("adapt_step keeps distinct children in first-seen order") {
  auto kids = adapt_step({example::root()});
  REQUIRE(kids.size() == 2);
  CHECK(kids[0] == example::learned_bottom_left());
  CHECK(kids[1] == example::learned_bottom_right());
  auto again = adapt_step({example::root(), example::root()});
  CHECK(again.size() == 2);
}

TEST_CASE("structural invariants on random draws") {
  for (const char* shape : {"2x2", "3x2"}) {
    auto sample = sampling::draw(shape, 25, 101);
    for (const auto& c : sample.cases) {
      const auto& g = c.graph;
      auto naive = naive_adaptation(c.mg);
      CAPTURE(c.draw);
      CHECK(naive.lad <= c.mg.num_positions());
      CHECK(naive.total_nodes >= g.stats.unique_mgs);
      CHECK(g.stats.unique_mgs <= (std::size_t{1} << c.mg.num_positions()));
      CHECK(g.stats.leaves >= 1);
      CHECK(g.stats.leaves >= g.stats.terminal_games);

      auto view = loopless_view(g);
      CHECK(topological_order(view).has_value());
      auto src = sources(view);
      REQUIRE(src.size() == 1);
      CHECK(view.nodes[src[0]] == PositionSet());
      for (auto i : sinks(view)) CHECK(g.terminal.count(view.nodes[i]) == 1);
      CHECK(longest_path(view) == naive.lad);

      // The stable set is the closure of the terminal games.
      std::vector<MisinformationGame> term;
      for (const auto& h : terminal_games(g)) term.push_back(*h);
      CHECK(same_game_set(closure(term), naive.stable_set));

      auto smes = compute_sme(g);
      CHECK_FALSE(smes.empty());
      auto one = find_one_sme(c.mg);
      CHECK(std::find(smes.begin(), smes.end(), one.profile) != smes.end());
      for (const auto& s : smes) {
        bool placed = false;
        for (const auto& x : g.terminal) {
          const auto& n = *g.node(x).nme;
          placed = placed || std::find(n.begin(), n.end(), s) != n.end();
        }
        CHECK(placed);
      }
    }
  }
}

TEST_CASE("parallel traversal matches the sequential one") {
  auto sample = sampling::draw("3x2", 6, 303);
  for (const auto& c : sample.cases) {
    auto dot1 = export_dot(c.graph);
    for (std::size_t k : {2, 4}) {
      auto p = parallel_traverse(c.mg, k);
      CHECK(p.terminal == c.graph.terminal);
      CHECK(p.stats.unique_mgs == c.graph.stats.unique_mgs);
      CHECK(p.stats.leaves == c.graph.stats.leaves);
      CHECK(compute_sme(p) == compute_sme(c.graph));
      CHECK(export_dot(p) == dot1);
    }
  }
  auto one = parallel_traverse(example::root(), 1);
  CHECK(export_dot(one) == export_dot(traverse(example::root())));
  CHECK_THROWS_AS(parallel_traverse(example::root(), 0), Error);
}

TEST_CASE("caps stop runaway traversals") {
  AdaptationOptions o;
  o.max_unique_mgs = 2;
  try {
    traverse(example::root(), o);
    FAIL("expected the cap to trip");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  CHECK_THROWS_AS(parallel_traverse(example::root(), 3, o), Error);
}

TEST_CASE("degenerate views abort the traversal unless allowed") {
  auto deg = NormalFormGame::bimatrix({{{-6, 8}, {-8, -2}}, {{-7, 5}, {4, 5}}});
  MisinformationGame mg{deg, {deg, deg}};
  CHECK_THROWS_AS(traverse(mg), Error);
  AdaptationOptions o;
  o.solver.allow_degenerate = true;
  CHECK_NOTHROW(traverse(mg, o));
}

TEST_CASE("DOT export of the running example") {
  auto g = traverse(example::root());
  auto dot = export_dot(g, {false, 1});
  CHECK(dot.rfind("digraph adaptation {", 0) == 0);
  CHECK(dot.find("{(2,1),(2,2)}") != std::string::npos);
  CHECK(dot.find("peripheries=2") != std::string::npos);
  auto loopless = export_dot(g, {true, 1});
  CHECK(loopless.find("n1 -> n1") == std::string::npos);
  CHECK(dot == export_dot(traverse(example::root()), {false, 1}));
}

}  // TEST_SUITE
