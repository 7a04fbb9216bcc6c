#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "misinfo/game.hpp"
#include "misinfo/profile.hpp"

namespace misinfo {

struct SolverOptions {
  double tol = 1e-9;                       // numeric residual / best-response tolerance
  double support_eps = kSupportEpsilon;    // numeric support threshold
  double dedupe_tol = 1e-6;                // numeric profiles closer than this are merged
  bool allow_degenerate = false;
  std::uint64_t seed = 0;
  int newton_starts = 16;
  int newton_iterations = 200;
  std::size_t support_cap = 1u << 16;      // joint supports tried by the numeric solver
};

struct EquilibriumSet {
  enum class Mode { Exact, Numeric };

  std::vector<StrategyProfile> profiles;  // sorted, duplicate-free
  Mode mode = Mode::Exact;
  // A positive-dimensional equilibrium component exists; only its vertices
  // are listed.
  bool degenerate = false;
  // Numeric mode: joint supports on which no start converged.
  std::size_t unconverged_supports = 0;
  bool completeness_warning() const { return unconverged_supports > 0 || profiles.empty(); }
};

// Pure profiles where nobody gains from a unilateral pure deviation.
std::vector<Position> pure_nash(const NormalFormGame& game);

// All equilibria of a two-player game in exact arithmetic.
EquilibriumSet support_enumeration_2p(const NormalFormGame& game);

// Equilibria of an N-player game via per-support multistart Newton.
EquilibriumSet nash_numeric(const NormalFormGame& game, const SolverOptions& opts = {});

// N=1: maximizers; N=2: exact support enumeration; N>=3: pure plus numeric.
EquilibriumSet all_nash(const NormalFormGame& game, const SolverOptions& opts = {});

// Exact check that nobody gains from a pure deviation (within tol for numeric
// profiles).
bool is_nash(const NormalFormGame& game, const StrategyProfile& profile, double tol = 0.0);

}  // namespace misinfo
