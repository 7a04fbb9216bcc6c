#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <exception>
#include <mutex>
#include <thread>

#include "misinfo/adaptation.hpp"
#include "misinfo/error.hpp"

namespace misinfo {

namespace {

class SharedSearch {
 public:
  SharedSearch(const MisinformationGame& mg, const AdaptationOptions& opts) : opts_(opts) {
    graph_.root = std::make_shared<const MisinformationGame>(mg);
    graph_.nodes[PositionSet()] = {
        graph_.root, std::make_shared<const std::vector<StrategyProfile>>(nme(mg, opts.solver)), true};
    visited_.insert(PositionSet());
    queue_.push_back(PositionSet());
    nme_calls_ = 1;
    unique_ = 1;
  }

  void run(std::size_t threads) {
    std::vector<std::vector<GraphEdge>> edges(threads);
    {
      std::vector<std::jthread> workers;
      for (std::size_t t = 0; t < threads; ++t) workers.emplace_back([this, &edges, t] { work(edges[t]); });
    }
    if (failure_) std::rethrow_exception(failure_);
    for (auto& e : edges) graph_.edges.insert(graph_.edges.end(), e.begin(), e.end());
    graph_.stats.nme_computations = nme_calls_;
    graph_.stats.update_computations = update_calls_;
    detail::finalize_graph(graph_);
  }

  AdaptationGraph take() { return std::move(graph_); }

 private:
  void work(std::vector<GraphEdge>& edges) {
    while (true) {
      PositionSet w;
      {
        std::unique_lock lock(queue_mu_);
        queue_cv_.wait(lock, [&] { return stop_ || !queue_.empty() || active_ == 0; });
        if (stop_ || queue_.empty()) {
          queue_cv_.notify_all();
          return;
        }
        w = std::move(queue_.front());
        queue_.pop_front();
        ++active_;
      }
      try {
        expand(w, edges);
      } catch (...) {
        std::lock_guard lock(queue_mu_);
        if (!failure_) failure_ = std::current_exception();
        stop_ = true;
      }
      {
        std::lock_guard lock(queue_mu_);
        --active_;
      }
      queue_cv_.notify_all();
    }
  }

  void expand(const PositionSet& w, std::vector<GraphEdge>& edges) {
    GraphNode here;
    {
      std::lock_guard lock(theta_mu_);
      here = graph_.nodes.at(w);
    }
    const NormalFormGame& shape = graph_.root->actual;
    auto chi = characteristic_cells(shape, *here.nme, opts_.solver.support_eps);
    if (std::any_of(chi.begin(), chi.end(), [&](std::size_t c) { return w.contains(c); })) mark_terminal(w);
    for (auto cell : chi) {
      if (w.contains(cell)) {
        edges.push_back({w, cell, w, true});
        continue;
      }
      PositionSet x = w.with(cell);
      edges.push_back({w, cell, x, false});
      {
        std::lock_guard lock(visited_mu_);
        if (!visited_.insert(x).second) continue;
      }
      MisinformationGame child = update_cell(*here.game, cell);
      ++update_calls_;
      if (mg_equal(child, *here.game)) {
        {
          std::lock_guard lock(theta_mu_);
          graph_.nodes[x] = {here.game, here.nme, false};
        }
        mark_terminal(w);
        continue;
      }
      auto profiles = nme(child, opts_.solver);
      ++nme_calls_;
      if (++unique_ > opts_.max_unique_mgs)
        throw Error(ErrorKind::CapExceeded, "traversal exceeded " + std::to_string(opts_.max_unique_mgs) +
                                                " distinct games (partial result discarded)");
      {
        std::lock_guard lock(theta_mu_);
        graph_.nodes[x] = {std::make_shared<const MisinformationGame>(std::move(child)),
                           std::make_shared<const std::vector<StrategyProfile>>(std::move(profiles)), true};
      }
      {
        std::lock_guard lock(queue_mu_);
        queue_.push_back(std::move(x));
        if (queue_.size() > opts_.max_queue)
          throw Error(ErrorKind::CapExceeded, "traversal queue exceeded " + std::to_string(opts_.max_queue));
      }
      queue_cv_.notify_one();
    }
  }

  void mark_terminal(const PositionSet& w) {
    std::lock_guard lock(terminal_mu_);
    graph_.terminal.insert(w);
  }

  const AdaptationOptions& opts_;
  AdaptationGraph graph_;

  std::mutex queue_mu_;
  std::condition_variable queue_cv_;
  std::deque<PositionSet> queue_;
  std::size_t active_ = 0;
  bool stop_ = false;
  std::exception_ptr failure_;

  std::mutex visited_mu_;
  std::set<PositionSet> visited_;
  std::mutex theta_mu_;
  std::mutex terminal_mu_;

  std::atomic<std::size_t> nme_calls_{0}, update_calls_{0}, unique_{0};
};

}  // namespace

AdaptationGraph parallel_traverse(const MisinformationGame& mg, std::size_t threads, const AdaptationOptions& opts) {
  if (threads == 0) throw Error(ErrorKind::InvalidArgument, "thread count must be at least 1");
  if (!is_canonical(mg)) throw Error(ErrorKind::NonCanonical, "traversal needs a canonical game");
  SharedSearch search(mg, opts);
  search.run(threads);
  return search.take();
}

}  // namespace misinfo
