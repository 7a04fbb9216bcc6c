#pragma once

#include <string>

#include "misinfo/adaptation.hpp"
#include "misinfo/experiments.hpp"
#include "misinfo/json_io.hpp"

namespace misinfo {

struct RunConfig {
  AdaptationOptions adaptation;
  std::size_t threads = 1;
  int index_base = 0;
};

const char* version();

// Options that influence results. The thread count is left out because it
// never changes them.
Json config_to_json(const RunConfig& cfg);

Json solve_report(const NormalFormGame& game, const RunConfig& cfg);
Json nme_report(const MisinformationGame& mg, const RunConfig& cfg);
// Runs the traversal, the SME extraction and the naive fixpoint.
Json adapt_report(const MisinformationGame& mg, const RunConfig& cfg);
Json sme_report(const MisinformationGame& mg, const RunConfig& cfg);
Json one_sme_report(const MisinformationGame& mg, const RunConfig& cfg);
Json experiment_report(const MonteCarloTable& table, const RunConfig& cfg);

std::string dump_report(const Json& j);

}  // namespace misinfo
