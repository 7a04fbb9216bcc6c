#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "misinfo/game.hpp"
#include "misinfo/nash.hpp"
#include "misinfo/profile.hpp"

namespace misinfo {

// True iff the profiles agree on every common player and common strategy.
bool compatible(const NormalFormGame& g, const StrategyProfile& sigma, const NormalFormGame& g2,
                const StrategyProfile& sigma2);

// Appends a player with a single strategy and payoff 0 everywhere.
NormalFormGame add_player(const NormalFormGame& game);

// Appends one strategy for `player`; every new cell pays m to everybody, where
// m is one less than the smallest payoff in the game (-1 for a game without
// payoffs).
NormalFormGame add_strategy(const NormalFormGame& game, std::size_t player);

// Adds players, then strategies per player, in ascending order.
NormalFormGame inflate_game(const NormalFormGame& game, std::size_t target_players,
                            const std::vector<std::size_t>& target_counts);

struct InflationReport {
  bool is_inflated = true;
  std::optional<int> violated_bullet;  // 1..5 when is_inflated is false
  std::optional<std::pair<StrategyProfile, StrategyProfile>> witness;
  std::string detail;
  // Equilibrium conditions were checked on pure profiles only.
  bool pure_only = false;
};

// Checks whether g2 is an inflated version of g: shape containment, payoff
// agreement on common profiles, and correspondence of equilibria in both
// directions. Throws Degenerate when an equilibrium set is not finite.
InflationReport is_inflated_version(const NormalFormGame& g, const NormalFormGame& g2);

}  // namespace misinfo
