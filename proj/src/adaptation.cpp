#include "misinfo/adaptation.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_map>

#include "misinfo/error.hpp"

namespace misinfo {

const GraphNode& AdaptationGraph::node(const PositionSet& x) const {
  auto it = nodes.find(x);
  if (it == nodes.end()) throw Error(ErrorKind::InvalidArgument, "position set not in graph");
  return it->second;
}

namespace {

// Content-addressed set of games that remembers insertion order.
class GameIndex {
 public:
  // Returns false when an equal game is already present.
  bool insert(const MisinformationGame& g) {
    if (contains(g)) return false;
    buckets_.emplace(g.hash(), items_.size());
    items_.push_back(g);
    return true;
  }
  bool contains(const MisinformationGame& g) const { return find(g).has_value(); }
  std::optional<std::size_t> find(const MisinformationGame& g) const {
    auto [lo, hi] = buckets_.equal_range(g.hash());
    for (auto it = lo; it != hi; ++it)
      if (items_[it->second] == g) return it->second;
    return std::nullopt;
  }
  const std::vector<MisinformationGame>& items() const { return items_; }
  std::vector<MisinformationGame> take() { return std::move(items_); }

 private:
  std::unordered_multimap<std::size_t, std::size_t> buckets_;
  std::vector<MisinformationGame> items_;
};

// Children of one game under the step operator, duplicates removed.
std::vector<MisinformationGame> children(const MisinformationGame& g, const SolverOptions& opts) {
  GameIndex out;
  for (auto cell : characteristic_cells(g.actual, nme(g, opts), opts.support_eps)) out.insert(update_cell(g, cell));
  return out.take();
}

}  // namespace

std::vector<MisinformationGame> adapt_step(const std::vector<MisinformationGame>& games, const SolverOptions& opts) {
  GameIndex out;
  for (const auto& g : games)
    for (auto& c : children(g, opts)) out.insert(c);
  return out.take();
}

NaiveResult naive_adaptation(const MisinformationGame& mg, std::size_t max_steps, const SolverOptions& opts) {
  if (!is_canonical(mg)) throw Error(ErrorKind::NonCanonical, "naive adaptation needs a canonical game");
  if (max_steps == 0) max_steps = mg.num_positions() + 1;
  NaiveResult res;
  res.total_nodes = 1;
  std::vector<MisinformationGame> current{mg};
  res.steps.push_back(current);
  // Games recur across levels; solve each distinct one once.
  GameIndex solved;
  std::vector<std::vector<MisinformationGame>> kids_of;
  for (std::size_t t = 0; t <= max_steps; ++t) {
    GameIndex next;
    for (const auto& g : current) {
      auto at = solved.find(g);
      if (!at) {
        solved.insert(g);
        kids_of.push_back(children(g, opts));
        at = kids_of.size() - 1;
      }
      const auto& kids = kids_of[*at];
      res.total_nodes += kids.size();
      for (const auto& k : kids) next.insert(k);
    }
    GameIndex now;
    for (const auto& g : current) now.insert(g);
    bool same = next.items().size() == current.size() &&
                std::all_of(next.items().begin(), next.items().end(),
                            [&](const MisinformationGame& g) { return now.contains(g); });
    if (same) {
      res.stable_set = std::move(current);
      res.lad = t;
      return res;
    }
    current = next.take();
    res.steps.push_back(current);
  }
  throw Error(ErrorKind::CapExceeded, "naive adaptation did not reach a fixpoint within " +
                                          std::to_string(max_steps) + " steps");
}

AdaptationGraph traverse(const MisinformationGame& mg, const AdaptationOptions& opts) {
  if (!is_canonical(mg)) throw Error(ErrorKind::NonCanonical, "traversal needs a canonical game");
  AdaptationGraph graph;
  graph.root = std::make_shared<const MisinformationGame>(mg);
  const NormalFormGame& shape = graph.root->actual;
  graph.nodes[PositionSet()] = {graph.root, std::make_shared<const std::vector<StrategyProfile>>(nme(mg, opts.solver)),
                                true};
  graph.stats.nme_computations = 1;
  std::size_t unique = 1;
  std::deque<PositionSet> queue{PositionSet()};

  while (!queue.empty()) {
    PositionSet w = std::move(queue.front());
    queue.pop_front();
    const GraphNode here = graph.nodes.at(w);
    auto chi = characteristic_cells(shape, *here.nme, opts.solver.support_eps);
    if (std::any_of(chi.begin(), chi.end(), [&](std::size_t c) { return w.contains(c); })) graph.terminal.insert(w);
    for (auto cell : chi) {
      if (w.contains(cell)) {
        graph.edges.push_back({w, cell, w, true});
        continue;
      }
      PositionSet x = w.with(cell);
      graph.edges.push_back({w, cell, x, false});
      if (graph.nodes.count(x)) continue;
      MisinformationGame child = update_cell(*here.game, cell);
      ++graph.stats.update_computations;
      if (mg_equal(child, *here.game)) {
        graph.nodes[x] = {here.game, here.nme, false};
        graph.terminal.insert(w);
        continue;
      }
      auto profiles = nme(child, opts.solver);
      ++graph.stats.nme_computations;
      graph.nodes[x] = {std::make_shared<const MisinformationGame>(std::move(child)),
                        std::make_shared<const std::vector<StrategyProfile>>(std::move(profiles)), true};
      if (++unique > opts.max_unique_mgs)
        throw Error(ErrorKind::CapExceeded, "traversal exceeded " + std::to_string(opts.max_unique_mgs) +
                                                " distinct games (partial result discarded)");
      queue.push_back(std::move(x));
      if (queue.size() > opts.max_queue)
        throw Error(ErrorKind::CapExceeded, "traversal queue exceeded " + std::to_string(opts.max_queue));
    }
  }
  detail::finalize_graph(graph);
  return graph;
}

void detail::finalize_graph(AdaptationGraph& graph) {
  std::sort(graph.edges.begin(), graph.edges.end());
  for (auto& e : graph.edges) e.loop = graph.nodes.at(e.from).game == graph.nodes.at(e.to).game;
  auto& st = graph.stats;
  st.visited_sets = graph.nodes.size();
  st.edges = graph.edges.size();
  st.unique_mgs = 0;
  std::set<const MisinformationGame*> terminal;
  for (const auto& x : graph.terminal) terminal.insert(graph.nodes.at(x).game.get());
  st.terminal_games = terminal.size();
  st.leaves = 0;
  for (const auto& [x, n] : graph.nodes) {
    if (n.expanded) ++st.unique_mgs;
    if (terminal.count(n.game.get())) ++st.leaves;
  }
}

std::vector<StrategyProfile> compute_sme(const AdaptationGraph& graph, const SolverOptions& opts) {
  std::vector<StrategyProfile> out;
  const NormalFormGame& shape = graph.shape();
  for (const auto& w : graph.terminal) {
    const GraphNode& here = graph.node(w);
    for (const auto& sigma : *here.nme) {
      bool stable = true;
      for (auto cell : characteristic_cells(shape, sigma, opts.support_eps)) {
        auto it = graph.nodes.find(w.with(cell));
        bool same = it != graph.nodes.end()
                        ? (it->second.game == here.game || mg_equal(*it->second.game, *here.game))
                        : !update_changes(*here.game, cell);
        if (!same) {
          stable = false;
          break;
        }
      }
      if (!stable) continue;
      bool dup = std::any_of(out.begin(), out.end(), [&](const StrategyProfile& p) {
        return p.is_exact() && sigma.is_exact() ? p == sigma : p.approx_equal(sigma, opts.dedupe_tol);
      });
      if (!dup) out.push_back(sigma);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StrategyProfile> adaptation_procedure(const MisinformationGame& mg, const AdaptationOptions& opts) {
  return compute_sme(traverse(mg, opts), opts.solver);
}

OneSme find_one_sme(const MisinformationGame& mg, const SolverOptions& opts) {
  if (!is_canonical(mg)) throw Error(ErrorKind::NonCanonical, "find_one_sme needs a canonical game");
  MisinformationGame g = mg;
  std::size_t updates = 0;
  while (true) {
    auto profiles = nme(g, opts);
    const StrategyProfile& sigma = profiles.front();
    auto chi = characteristic_cells(g.actual, sigma, opts.support_eps);
    auto it = std::find_if(chi.begin(), chi.end(), [&](std::size_t c) { return update_changes(g, c); });
    if (it == chi.end()) return {sigma, updates, std::move(g)};
    g = update_cell(g, *it);
    ++updates;
  }
}

LooplessView loopless_view(const AdaptationGraph& graph) {
  LooplessView view;
  // Each distinct game is one node; aliases resolve to the set that expanded it.
  std::map<const MisinformationGame*, std::size_t> index;
  for (const auto& [x, n] : graph.nodes) {
    if (!n.expanded) continue;
    index[n.game.get()] = view.nodes.size();
    view.nodes.push_back(x);
  }
  for (const auto& e : graph.edges) {
    if (e.loop) continue;
    view.edges.emplace_back(index.at(graph.nodes.at(e.from).game.get()), index.at(graph.nodes.at(e.to).game.get()));
  }
  std::sort(view.edges.begin(), view.edges.end());
  view.edges.erase(std::unique(view.edges.begin(), view.edges.end()), view.edges.end());
  return view;
}

std::optional<std::vector<std::size_t>> topological_order(const LooplessView& view) {
  const std::size_t n = view.nodes.size();
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (auto [a, b] : view.edges) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    auto v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (auto w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

std::vector<std::size_t> sources(const LooplessView& view) {
  std::vector<bool> has_in(view.nodes.size(), false);
  for (auto [a, b] : view.edges) has_in[b] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < view.nodes.size(); ++v)
    if (!has_in[v]) out.push_back(v);
  return out;
}

std::vector<std::size_t> sinks(const LooplessView& view) {
  std::vector<bool> has_out(view.nodes.size(), false);
  for (auto [a, b] : view.edges) has_out[a] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < view.nodes.size(); ++v)
    if (!has_out[v]) out.push_back(v);
  return out;
}

std::size_t longest_path(const LooplessView& view) {
  auto order = topological_order(view);
  if (!order) throw Error(ErrorKind::InvalidArgument, "longest path of a cyclic graph");
  std::vector<std::vector<std::size_t>> out(view.nodes.size());
  for (auto [a, b] : view.edges) out[a].push_back(b);
  std::vector<std::size_t> dist(view.nodes.size(), 0);
  std::size_t best = 0;
  for (auto v : *order) {
    best = std::max(best, dist[v]);
    for (auto w : out[v]) dist[w] = std::max(dist[w], dist[v] + 1);
  }
  return best;
}

std::vector<GameHandle> terminal_games(const AdaptationGraph& graph) {
  std::vector<GameHandle> out;
  for (const auto& x : graph.terminal) {
    const auto& g = graph.node(x).game;
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  return out;
}

}  // namespace misinfo
