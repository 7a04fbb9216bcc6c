#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "misinfo/adaptation.hpp"
#include "misinfo/misinfo_game.hpp"

namespace misinfo {

struct Setting {
  std::vector<std::size_t> strategy_counts;
  std::size_t runs = 100;
  std::uint64_t seed = 0;
  std::int64_t payoff_lo = -10;
  std::int64_t payoff_hi = 10;

  // "3x2x2" style.
  static Setting parse(std::string_view shape);
  std::string name() const;
  std::size_t positions() const;
  void validate() const;
};

// Seed of the PRNG stream for one run; `attempt` advances to a fresh
// substream after a degenerate draw.
std::uint64_t run_seed(const Setting& setting, std::size_t run_index, std::size_t attempt = 0);

// Canonical game with independent uniform integer payoffs for the actual game
// and every subjective game.
MisinformationGame random_misinfo(const Setting& setting, std::size_t run_index, std::size_t attempt = 0);

// Instance on which the procedure needs |S| steps: every player's view is a
// common-payoff game with distinct values |S|..1 and the actual game is its
// negation. Two-player instances use a row-by-row zigzag order so that each
// intermediate view has a unique equilibrium; larger instances use descending
// lexicographic order.
MisinformationGame adversarial_lad(const Setting& setting);

struct RunMetrics {
  std::size_t run = 0;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
  std::size_t naive_nodes = 0;
  std::size_t unique_mgs = 0;
  std::size_t leaves = 0;
  std::size_t terminal_games = 0;
  std::size_t smes = 0;
  std::size_t lad = 0;
  std::size_t positions = 0;
  double wall_total_s = 0;
  double wall_core_s = 0;
  bool failed = false;
  std::string error;
};

struct Aggregate {
  std::size_t completed = 0;
  std::size_t failures = 0;
  double naive_nodes = 0;
  double unique_mgs = 0;
  double leaves = 0;
  double terminal_games = 0;
  double smes = 0;
  double lad = 0;
  double wall_total_s = 0;
  double wall_core_s = 0;
};

struct MonteCarloTable {
  Setting setting;
  std::vector<RunMetrics> rows;  // one per run, failures included
  Aggregate aggregate;
};

struct MonteCarloOptions {
  AdaptationOptions adaptation;
  std::size_t threads = 1;  // runs executed concurrently
  std::size_t retries = 3;  // extra draws after a degenerate one
};

RunMetrics run_once(const Setting& setting, std::size_t run_index, const MonteCarloOptions& opts = {});
MonteCarloTable monte_carlo(const Setting& setting, const MonteCarloOptions& opts = {});
Aggregate aggregate(const std::vector<RunMetrics>& rows);

// "2^k" rendered as an integer when it fits in 64 bits.
std::string search_space_size(std::size_t positions);

// Header plus one line per completed run.
std::string emit_csv(const MonteCarloTable& table);

}  // namespace misinfo
