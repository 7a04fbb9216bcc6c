#include "misinfo/reports.hpp"

#include <cmath>

#include "misinfo/error.hpp"
#include "misinfo/welfare.hpp"

namespace misinfo {

const char* version() { return MISINFO_VERSION; }

namespace {

Json number_to_json(const Number& n) {
  if (n.is_exact()) return n.exact().str();
  return n.to_double();
}

Json profiles_to_json(const std::vector<StrategyProfile>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(profile_to_json(p));
  return out;
}

// A metric that may be undefined: the value, or null plus the reason.
template <class F>
void put_metric(Json& out, const char* key, F&& compute) {
  try {
    out[key] = number_to_json(compute());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UndefinedMetric) throw;
    out[key] = nullptr;
    out[std::string(key) + "_error"] = e.what();
  }
}

Json cells_to_json(const NormalFormGame& shape, const std::vector<std::size_t>& cells, int base) {
  Json out = Json::array();
  for (auto c : cells) out.push_back(position_to_json(shape.position(c), base));
  return out;
}

Json envelope(const RunConfig& cfg) {
  Json j;
  j["version"] = version();
  j["config"] = config_to_json(cfg);
  return j;
}

}  // namespace

Json config_to_json(const RunConfig& cfg) {
  const auto& s = cfg.adaptation.solver;
  Json j;
  j["tol"] = s.tol;
  j["support_eps"] = s.support_eps;
  j["allow_degenerate"] = s.allow_degenerate;
  j["seed"] = s.seed;
  j["max_nodes"] = cfg.adaptation.max_unique_mgs;
  j["index_base"] = cfg.index_base;
  return j;
}

Json solve_report(const NormalFormGame& game, const RunConfig& cfg) {
  EquilibriumSet es = all_nash(game, cfg.adaptation.solver);
  Json j = envelope(cfg);
  j["mode"] = es.mode == EquilibriumSet::Mode::Exact ? "exact" : "numeric";
  j["degenerate"] = es.degenerate;
  if (es.mode == EquilibriumSet::Mode::Numeric) j["unconverged_supports"] = es.unconverged_supports;
  j["equilibria"] = profiles_to_json(es.profiles);
  auto opt = social_optimum(game);
  j["social_optimum"] = {{"profile", position_to_json(opt.profile, cfg.index_base)},
                         {"value", opt.value.str()}};
  if (!es.profiles.empty()) put_metric(j, "price_of_anarchy", [&] { return price_of_anarchy(game, es.profiles); });
  return j;
}

Json nme_report(const MisinformationGame& mg, const RunConfig& cfg) {
  const auto& opts = cfg.adaptation.solver;
  auto profiles = nme(mg, opts);
  Json j = envelope(cfg);
  j["nme"] = profiles_to_json(profiles);
  j["characteristic_set"] = cells_to_json(mg.actual, characteristic_cells(mg.actual, profiles, opts.support_eps),
                                          cfg.index_base);
  Json welfare = Json::array();
  for (const auto& p : profiles) welfare.push_back(number_to_json(social_welfare(mg.actual, p)));
  j["social_welfare"] = welfare;
  put_metric(j, "price_of_misinformation", [&] { return price_of_misinformation(mg, profiles); });
  EquilibriumSet actual = all_nash(mg.actual, opts);
  if (!actual.profiles.empty())
    put_metric(j, "price_of_anarchy", [&] { return price_of_anarchy(mg.actual, actual.profiles); });
  return j;
}

Json adapt_report(const MisinformationGame& mg, const RunConfig& cfg) {
  AdaptationGraph graph = cfg.threads > 1 ? parallel_traverse(mg, cfg.threads, cfg.adaptation)
                                          : traverse(mg, cfg.adaptation);
  auto smes = compute_sme(graph, cfg.adaptation.solver);
  NaiveResult naive = naive_adaptation(mg, 0, cfg.adaptation.solver);
  Json j = envelope(cfg);
  j["lad"] = naive.lad;
  j["unique_mgs"] = graph.stats.unique_mgs;
  j["naive_nodes"] = naive.total_nodes;
  j["leaves"] = graph.stats.leaves;
  j["terminal_games"] = graph.stats.terminal_games;
  j["stable_set_size"] = naive.stable_set.size();
  j["smes"] = profiles_to_json(smes);
  Json terminal = Json::array();
  for (const auto& x : graph.terminal) terminal.push_back(cells_to_json(mg.actual, x.cells(), cfg.index_base));
  j["terminal"] = terminal;
  return j;
}

Json sme_report(const MisinformationGame& mg, const RunConfig& cfg) {
  AdaptationGraph graph = cfg.threads > 1 ? parallel_traverse(mg, cfg.threads, cfg.adaptation)
                                          : traverse(mg, cfg.adaptation);
  Json j = envelope(cfg);
  j["smes"] = profiles_to_json(compute_sme(graph, cfg.adaptation.solver));
  return j;
}

Json one_sme_report(const MisinformationGame& mg, const RunConfig& cfg) {
  OneSme one = find_one_sme(mg, cfg.adaptation.solver);
  Json j = envelope(cfg);
  j["sme"] = profile_to_json(one.profile);
  j["updates"] = one.updates;
  return j;
}

Json experiment_report(const MonteCarloTable& table, const RunConfig& cfg) {
  Json j = envelope(cfg);
  const auto& a = table.aggregate;
  j["setting"] = table.setting.name();
  j["runs"] = table.setting.runs;
  j["seed"] = table.setting.seed;
  j["payoff_range"] = {table.setting.payoff_lo, table.setting.payoff_hi};
  j["completed"] = a.completed;
  j["failures"] = a.failures;
  j["sp"] = search_space_size(table.setting.positions());
  Json mean;
  mean["naive_nodes"] = a.naive_nodes;
  mean["unique_mgs"] = a.unique_mgs;
  mean["leaves"] = a.leaves;
  mean["terminal_games"] = a.terminal_games;
  mean["smes"] = a.smes;
  mean["lad"] = a.lad;
  j["mean"] = mean;
  Json rounded;
  for (const char* k : {"naive_nodes", "unique_mgs", "leaves", "smes", "lad"})
    rounded[k] = static_cast<long long>(std::llround(mean[k].get<double>()));
  j["rounded"] = rounded;
  Json failed = Json::array();
  for (const auto& r : table.rows)
    if (r.failed) failed.push_back({{"run", r.run}, {"error", r.error}});
  j["failed_runs"] = failed;
  return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace misinfo
