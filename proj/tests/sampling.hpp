#pragma once
// Seeded draws of random misinformation games whose adaptation is well defined.
// A draw is skipped when some view reached during adaptation has a continuum of
// equilibria; the number of skipped draws is kept so callers can report it.
#include <cstdint>
#include <vector>

#include "misinfo/adaptation.hpp"
#include "misinfo/error.hpp"
#include "misinfo/experiments.hpp"

namespace sampling {

struct Case {
  std::size_t draw = 0;  // run index handed to random_misinfo
  misinfo::MisinformationGame mg;
  misinfo::AdaptationGraph graph;
};

struct Sample {
  std::vector<Case> cases;
  std::size_t skipped = 0;
};

inline Sample draw(const char* shape, std::size_t wanted, std::uint64_t seed) {
  misinfo::Setting s = misinfo::Setting::parse(shape);
  s.seed = seed;
  Sample out;
  for (std::size_t run = 0; out.cases.size() < wanted; ++run) {
    if (run > wanted * 20) throw misinfo::Error(misinfo::ErrorKind::Degenerate, "too many degenerate draws");
    auto mg = misinfo::random_misinfo(s, run);
    try {
      auto graph = misinfo::traverse(mg);
      out.cases.push_back({run, std::move(mg), std::move(graph)});
    } catch (const misinfo::Error& e) {
      if (e.kind() != misinfo::ErrorKind::Degenerate) throw;
      ++out.skipped;
    }
  }
  return out;
}

}  // namespace sampling
