#include "misinfo/experiments.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <thread>

#include "misinfo/error.hpp"
#include "misinfo/rng.hpp"

namespace misinfo {

Setting Setting::parse(std::string_view shape) {
  Setting s;
  std::size_t start = 0;
  while (start <= shape.size()) {
    std::size_t end = shape.find('x', start);
    if (end == std::string_view::npos) end = shape.size();
    std::string_view part = shape.substr(start, end - start);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || value == 0)
      throw Error(ErrorKind::Parse, "malformed setting '" + std::string(shape) + "', expected e.g. 3x2");
    s.strategy_counts.push_back(value);
    start = end + 1;
  }
  return s;
}

std::string Setting::name() const {
  std::string s;
  for (std::size_t i = 0; i < strategy_counts.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(strategy_counts[i]);
  }
  return s;
}

std::size_t Setting::positions() const {
  std::size_t p = 1;
  for (auto c : strategy_counts) p *= c;
  return p;
}

void Setting::validate() const {
  if (strategy_counts.empty()) throw Error(ErrorKind::InvalidArgument, "setting needs at least one player");
  for (auto c : strategy_counts)
    if (c == 0) throw Error(ErrorKind::InvalidArgument, "every player needs at least one strategy");
  if (payoff_lo > payoff_hi) throw Error(ErrorKind::InvalidArgument, "payoff range is empty");
}

std::uint64_t run_seed(const Setting& setting, std::size_t run_index, std::size_t attempt) {
  return derive_seed(setting.seed, run_index, attempt);
}

MisinformationGame random_misinfo(const Setting& setting, std::size_t run_index, std::size_t attempt) {
  setting.validate();
  Rng rng(run_seed(setting, run_index, attempt));
  const std::size_t n = setting.strategy_counts.size();
  auto draw = [&] {
    std::vector<Rational> flat(setting.positions() * n);
    for (auto& r : flat) r = Rational(static_cast<long>(uniform_int(rng, setting.payoff_lo, setting.payoff_hi)));
    return NormalFormGame(setting.strategy_counts, std::move(flat));
  };
  MisinformationGame mg{draw(), {}};
  for (std::size_t i = 0; i < n; ++i) mg.subjective.push_back(draw());
  return mg;
}

MisinformationGame adversarial_lad(const Setting& setting) {
  setting.validate();
  const auto& counts = setting.strategy_counts;
  const std::size_t n = counts.size();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "adversarial instance needs at least two players");
  NormalFormGame shape = NormalFormGame::filled(counts, Rational());

  std::vector<std::size_t> order;  // cells from largest value to smallest
  if (n == 2) {
    for (std::size_t k = 0; k < counts[0]; ++k) {
      std::size_t row = counts[0] - 1 - k;
      for (std::size_t t = 0; t < counts[1]; ++t) {
        std::size_t col = k % 2 == 0 ? counts[1] - 1 - t : t;
        order.push_back(shape.cell_index(Position{row, col}));
      }
    }
  } else {
    for (std::size_t c = shape.num_cells(); c-- > 0;) order.push_back(c);
  }

  NormalFormGame view = shape, actual = shape;
  long value = static_cast<long>(order.size());
  for (auto cell : order) {
    for (std::size_t i = 0; i < n; ++i) {
      view.set_payoff(cell, i, Rational(value));
      actual.set_payoff(cell, i, Rational(-value));
    }
    --value;
  }
  return MisinformationGame{actual, std::vector<NormalFormGame>(n, view)};
}

RunMetrics run_once(const Setting& setting, std::size_t run_index, const MonteCarloOptions& opts) {
  using Clock = std::chrono::steady_clock;
  RunMetrics m;
  m.run = run_index;
  m.positions = setting.positions();
  for (std::size_t attempt = 0; attempt <= opts.retries; ++attempt) {
    m.attempts = attempt + 1;
    m.seed = run_seed(setting, run_index, attempt);
    auto t0 = Clock::now();
    try {
      MisinformationGame mg = random_misinfo(setting, run_index, attempt);
      NaiveResult naive = naive_adaptation(mg, 0, opts.adaptation.solver);
      auto t1 = Clock::now();
      AdaptationGraph graph = traverse(mg, opts.adaptation);
      auto smes = compute_sme(graph, opts.adaptation.solver);
      auto t2 = Clock::now();
      m.naive_nodes = naive.total_nodes;
      m.lad = naive.lad;
      m.unique_mgs = graph.stats.unique_mgs;
      m.leaves = graph.stats.leaves;
      m.terminal_games = graph.stats.terminal_games;
      m.smes = smes.size();
      m.wall_core_s = std::chrono::duration<double>(t2 - t1).count();
      m.wall_total_s = std::chrono::duration<double>(t2 - t0).count();
      m.failed = false;
      m.error.clear();
      return m;
    } catch (const Error& e) {
      m.failed = true;
      m.error = std::string(to_string(e.kind())) + ": " + e.what();
      if (e.kind() != ErrorKind::Degenerate) return m;
    }
  }
  return m;
}

Aggregate aggregate(const std::vector<RunMetrics>& rows) {
  Aggregate a;
  for (const auto& r : rows) {
    if (r.failed) {
      ++a.failures;
      continue;
    }
    ++a.completed;
    a.naive_nodes += static_cast<double>(r.naive_nodes);
    a.unique_mgs += static_cast<double>(r.unique_mgs);
    a.leaves += static_cast<double>(r.leaves);
    a.terminal_games += static_cast<double>(r.terminal_games);
    a.smes += static_cast<double>(r.smes);
    a.lad += static_cast<double>(r.lad);
    a.wall_total_s += r.wall_total_s;
    a.wall_core_s += r.wall_core_s;
  }
  if (a.completed) {
    const double k = static_cast<double>(a.completed);
    for (double* v : {&a.naive_nodes, &a.unique_mgs, &a.leaves, &a.terminal_games, &a.smes, &a.lad,
                      &a.wall_total_s, &a.wall_core_s})
      *v /= k;
  }
  return a;
}

MonteCarloTable monte_carlo(const Setting& setting, const MonteCarloOptions& opts) {
  setting.validate();
  MonteCarloTable table;
  table.setting = setting;
  table.rows.resize(setting.runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r; (r = next++) < setting.runs;) table.rows[r] = run_once(setting, r, opts);
  };
  std::size_t threads = std::max<std::size_t>(1, std::min(opts.threads, setting.runs));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  table.aggregate = aggregate(table.rows);
  return table;
}

std::string search_space_size(std::size_t positions) {
  if (positions < 64) return std::to_string(std::uint64_t{1} << positions);
  return "2^" + std::to_string(positions);
}

std::string emit_csv(const MonteCarloTable& table) {
  std::string out = "setting,run,seed,naive_nodes,unique_mgs,leaves,smes,lad,sp,wall_total_s,wall_core_s\n";
  const std::string name = table.setting.name();
  char buf[64];
  for (const auto& r : table.rows) {
    if (r.failed) continue;
    out += name + ',' + std::to_string(r.run) + ',' + std::to_string(r.seed) + ',' + std::to_string(r.naive_nodes) +
           ',' + std::to_string(r.unique_mgs) + ',' + std::to_string(r.leaves) + ',' + std::to_string(r.smes) + ',' +
           std::to_string(r.lad) + ',' + search_space_size(r.positions) + ',';
    std::snprintf(buf, sizeof buf, "%.3f,%.3f\n", r.wall_total_s, r.wall_core_s);
    out += buf;
  }
  return out;
}

}  // namespace misinfo
