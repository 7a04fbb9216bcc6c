#include "misinfo.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "misinfo/error.hpp"
#include "misinfo/experiments.hpp"
#include "misinfo/inflation.hpp"
#include "misinfo/reports.hpp"

struct mi_game {
  misinfo::NormalFormGame game;
};
struct mi_misinfo {
  misinfo::MisinformationGame mg;
};
struct mi_options {
  misinfo::RunConfig cfg;
};

namespace {

thread_local std::string last_error;

mi_status fail(mi_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
mi_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return MI_OK;
  } catch (const misinfo::Error& e) {
    using misinfo::ErrorKind;
    switch (e.kind()) {
      case ErrorKind::Parse:
      case ErrorKind::Schema:
        return fail(MI_ERR_PARSE, e.what());
      case ErrorKind::Io:
        return fail(MI_ERR_IO, e.what());
      case ErrorKind::InvalidArgument:
      case ErrorKind::ShapeMismatch:
        return fail(MI_ERR_INVALID_ARGUMENT, e.what());
      default:
        return fail(MI_ERR_DOMAIN, std::string(misinfo::to_string(e.kind())) + ": " + e.what());
    }
  } catch (const std::bad_alloc&) {
    return fail(MI_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MI_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const misinfo::RunConfig& config(const mi_options* o) {
  static const misinfo::RunConfig defaults;
  return o ? o->cfg : defaults;
}

template <class... P>
bool any_null(const P*... p) {
  return ((p == nullptr) || ...);
}

}  // namespace

extern "C" {

const char* mi_version(void) { return misinfo::version(); }
const char* mi_last_error(void) { return last_error.c_str(); }
void mi_string_free(char* s) { std::free(s); }

mi_options* mi_options_new(void) { return new (std::nothrow) mi_options{}; }
void mi_options_free(mi_options* o) { delete o; }

mi_status mi_options_set_threads(mi_options* o, size_t threads) {
  if (!o || threads == 0) return fail(MI_ERR_INVALID_ARGUMENT, "thread count must be at least 1");
  o->cfg.threads = threads;
  return MI_OK;
}
mi_status mi_options_set_seed(mi_options* o, uint64_t seed) {
  if (!o) return fail(MI_ERR_INVALID_ARGUMENT, "null options");
  o->cfg.adaptation.solver.seed = seed;
  return MI_OK;
}
mi_status mi_options_set_tolerance(mi_options* o, double tol) {
  if (!o || !(tol > 0)) return fail(MI_ERR_INVALID_ARGUMENT, "tolerance must be positive");
  o->cfg.adaptation.solver.tol = tol;
  return MI_OK;
}
mi_status mi_options_set_support_eps(mi_options* o, double eps) {
  if (!o || !(eps > 0)) return fail(MI_ERR_INVALID_ARGUMENT, "support epsilon must be positive");
  o->cfg.adaptation.solver.support_eps = eps;
  return MI_OK;
}
mi_status mi_options_set_allow_degenerate(mi_options* o, int allow) {
  if (!o) return fail(MI_ERR_INVALID_ARGUMENT, "null options");
  o->cfg.adaptation.solver.allow_degenerate = allow != 0;
  return MI_OK;
}
mi_status mi_options_set_max_nodes(mi_options* o, size_t max_nodes) {
  if (!o || max_nodes == 0) return fail(MI_ERR_INVALID_ARGUMENT, "node cap must be positive");
  o->cfg.adaptation.max_unique_mgs = max_nodes;
  return MI_OK;
}
mi_status mi_options_set_index_base(mi_options* o, int base) {
  if (!o || (base != 0 && base != 1)) return fail(MI_ERR_INVALID_ARGUMENT, "index base must be 0 or 1");
  o->cfg.index_base = base;
  return MI_OK;
}

mi_status mi_game_from_json(const char* json, mi_game** out) {
  if (any_null(json, out)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new mi_game{misinfo::parse_game_json(json)}; });
}
mi_status mi_game_to_json(const mi_game* g, char** out) {
  if (any_null(g, out)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(misinfo::emit_game_json(g->game)); });
}
void mi_game_free(mi_game* g) { delete g; }
size_t mi_game_num_players(const mi_game* g) { return g ? g->game.num_players() : 0; }

mi_status mi_misinfo_from_json(const char* json, mi_misinfo** out) {
  if (any_null(json, out)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new mi_misinfo{misinfo::parse_misinfo_json(json)}; });
}
mi_status mi_misinfo_to_json(const mi_misinfo* mg, char** out) {
  if (any_null(mg, out)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(misinfo::emit_misinfo_json(mg->mg)); });
}
void mi_misinfo_free(mi_misinfo* mg) { delete mg; }
int mi_misinfo_is_canonical(const mi_misinfo* mg) { return mg && misinfo::is_canonical(mg->mg) ? 1 : 0; }

mi_status mi_solve(const mi_game* g, const mi_options* o, char** out_json) {
  if (any_null(g, out_json)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out_json = copy_string(misinfo::dump_report(misinfo::solve_report(g->game, config(o)))); });
}

mi_status mi_inflate(const mi_game* g, size_t players, const size_t* counts, size_t ncounts, mi_game** out) {
  if (any_null(g, out) || (ncounts && !counts)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<std::size_t> target(counts, counts + ncounts);
    *out = new mi_game{misinfo::inflate_game(g->game, players, target)};
  });
}

mi_status mi_canonicalize(const mi_misinfo* mg, mi_misinfo** out) {
  if (any_null(mg, out)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new mi_misinfo{misinfo::inflation_process(mg->mg)}; });
}

mi_status mi_nme(const mi_misinfo* mg, const mi_options* o, char** out_json) {
  if (any_null(mg, out_json)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out_json = copy_string(misinfo::dump_report(misinfo::nme_report(mg->mg, config(o)))); });
}

mi_status mi_adapt(const mi_misinfo* mg, const mi_options* o, char** out_json) {
  if (any_null(mg, out_json)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out_json = copy_string(misinfo::dump_report(misinfo::adapt_report(mg->mg, config(o)))); });
}

mi_status mi_sme(const mi_misinfo* mg, const mi_options* o, char** out_json) {
  if (any_null(mg, out_json)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out_json = copy_string(misinfo::dump_report(misinfo::sme_report(mg->mg, config(o)))); });
}

mi_status mi_one_sme(const mi_misinfo* mg, const mi_options* o, char** out_json) {
  if (any_null(mg, out_json)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out_json = copy_string(misinfo::dump_report(misinfo::one_sme_report(mg->mg, config(o)))); });
}

mi_status mi_export_dot(const mi_misinfo* mg, const mi_options* o, int loopless, char** out_dot) {
  if (any_null(mg, out_dot)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& cfg = config(o);
    auto graph = cfg.threads > 1 ? misinfo::parallel_traverse(mg->mg, cfg.threads, cfg.adaptation)
                                 : misinfo::traverse(mg->mg, cfg.adaptation);
    *out_dot = copy_string(misinfo::export_dot(graph, {loopless != 0, cfg.index_base}));
  });
}

mi_status mi_experiment(const char* setting, size_t runs, long payoff_lo, long payoff_hi, const mi_options* o,
                        int format, char** out) {
  if (any_null(setting, out)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument");
  if (runs == 0) return fail(MI_ERR_INVALID_ARGUMENT, "runs must be positive");
  if (format != 0 && format != 1) return fail(MI_ERR_INVALID_ARGUMENT, "format must be 0 (CSV) or 1 (JSON)");
  return guarded([&] {
    const auto& cfg = config(o);
    misinfo::Setting s = misinfo::Setting::parse(setting);
    s.runs = runs;
    s.seed = cfg.adaptation.solver.seed;
    s.payoff_lo = payoff_lo;
    s.payoff_hi = payoff_hi;
    misinfo::MonteCarloOptions mc;
    mc.adaptation = cfg.adaptation;
    mc.threads = cfg.threads;
    auto table = misinfo::monte_carlo(s, mc);
    *out = copy_string(format == 0 ? misinfo::emit_csv(table)
                                   : misinfo::dump_report(misinfo::experiment_report(table, cfg)));
  });
}

mi_status mi_adversarial(const char* setting, mi_misinfo** out) {
  if (any_null(setting, out)) return fail(MI_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new mi_misinfo{misinfo::adversarial_lad(misinfo::Setting::parse(setting))}; });
}

}  // extern "C"
