#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "misinfo/misinfo_game.hpp"
#include "misinfo/nash.hpp"

namespace misinfo {

using GameHandle = std::shared_ptr<const MisinformationGame>;
using ProfileList = std::shared_ptr<const std::vector<StrategyProfile>>;

struct AdaptationOptions {
  SolverOptions solver;
  std::size_t max_unique_mgs = 1'000'000;
  std::size_t max_queue = 1'000'000;
};

// One learned-position set X together with θ[X] and its NME.
struct GraphNode {
  GameHandle game;
  ProfileList nme;
  // X owns a game of its own; false when θ[X] equals its parent's game.
  bool expanded = false;
};

struct GraphEdge {
  PositionSet from;
  std::size_t cell = 0;
  PositionSet to;
  bool loop = false;  // θ[from] == θ[to]

  auto operator<=>(const GraphEdge& o) const {
    if (auto c = from <=> o.from; c != 0) return c;
    return cell <=> o.cell;
  }
  bool operator==(const GraphEdge& o) const { return from == o.from && cell == o.cell; }
};

struct TraversalStats {
  std::size_t unique_mgs = 0;        // distinct games (expanded sets)
  std::size_t visited_sets = 0;      // position sets reached, aliases included
  std::size_t edges = 0;
  std::size_t leaves = 0;            // position sets whose game is terminal
  std::size_t terminal_games = 0;    // distinct terminal games
  std::size_t nme_computations = 0;
  std::size_t update_computations = 0;
};

struct AdaptationGraph {
  GameHandle root;
  std::map<PositionSet, GraphNode> nodes;
  std::vector<GraphEdge> edges;  // sorted by (from, cell)
  std::set<PositionSet> terminal;
  TraversalStats stats;

  const NormalFormGame& shape() const { return root->actual; }
  const GraphNode& node(const PositionSet& x) const;
};

// One step of the procedure on a set of games, duplicates removed. Output
// keeps first-occurrence order.
std::vector<MisinformationGame> adapt_step(const std::vector<MisinformationGame>& games,
                                           const SolverOptions& opts = {});

struct NaiveResult {
  std::vector<MisinformationGame> stable_set;
  std::size_t lad = 0;
  // Root plus every child generated per parent at every step, duplicates
  // across parents included.
  std::size_t total_nodes = 0;
  // Game sets of steps 0..lad.
  std::vector<std::vector<MisinformationGame>> steps;
};

// Iterates the step operator until two consecutive sets coincide. max_steps of
// 0 means |S| + 1.
NaiveResult naive_adaptation(const MisinformationGame& mg, std::size_t max_steps = 0,
                             const SolverOptions& opts = {});

// Breadth-first search over learned-position sets.
AdaptationGraph traverse(const MisinformationGame& mg, const AdaptationOptions& opts = {});

// Same search with `threads` workers sharing queue, visited set, terminal set
// and θ. Results do not depend on scheduling.
AdaptationGraph parallel_traverse(const MisinformationGame& mg, std::size_t threads,
                                  const AdaptationOptions& opts = {});

// Stable misinformed equilibria from a finished traversal, sorted.
std::vector<StrategyProfile> compute_sme(const AdaptationGraph& graph, const SolverOptions& opts = {});

std::vector<StrategyProfile> adaptation_procedure(const MisinformationGame& mg, const AdaptationOptions& opts = {});

struct OneSme {
  StrategyProfile profile;
  std::size_t updates = 0;
  MisinformationGame final_game;
};

// Follows one maximal path: first NME, first position that still teaches
// something.
OneSme find_one_sme(const MisinformationGame& mg, const SolverOptions& opts = {});

// The graph without loops: expanded sets and the edges between distinct games.
struct LooplessView {
  std::vector<PositionSet> nodes;                          // sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // indices into nodes
};

LooplessView loopless_view(const AdaptationGraph& graph);
std::optional<std::vector<std::size_t>> topological_order(const LooplessView& view);
std::vector<std::size_t> sources(const LooplessView& view);
std::vector<std::size_t> sinks(const LooplessView& view);
// Number of edges on the longest path; requires an acyclic view.
std::size_t longest_path(const LooplessView& view);

// Distinct games of the terminal set, in position-set order.
std::vector<GameHandle> terminal_games(const AdaptationGraph& graph);

struct DotOptions {
  bool loopless = false;
  int index_base = 0;
};

std::string export_dot(const AdaptationGraph& graph, const DotOptions& opts = {});

namespace detail {
// Sorts edges, classifies loops and fills the statistics.
void finalize_graph(AdaptationGraph& graph);
}  // namespace detail

}  // namespace misinfo
