#pragma once

#include <span>
#include <vector>

#include "misinfo/game.hpp"
#include "misinfo/profile.hpp"

namespace misinfo {

// Expected payoff of `player` under `profile`. Exact when the profile is exact.
Number expected_payoff(const NormalFormGame& game, const StrategyProfile& profile, std::size_t player);

// Expected payoff of `player` deviating to pure strategy `strategy` while the
// others keep playing `profile`.
Number deviation_payoff(const NormalFormGame& game, const StrategyProfile& profile, std::size_t player,
                        std::size_t strategy);

Number social_welfare(const NormalFormGame& game, const StrategyProfile& profile);

struct SocialOptimum {
  Position profile;
  Rational value;
};

// Best pure profile by total payoff; ties go to the lexicographically smallest.
SocialOptimum social_optimum(const NormalFormGame& game);

// SW(opt) / min over equilibria of SW. Throws UndefinedMetric when the
// denominator is not positive and EmptyEquilibria on an empty set.
Number price_of_anarchy(const NormalFormGame& game, std::span<const StrategyProfile> equilibria);

// Shared by price_of_anarchy and price_of_misinformation.
Number welfare_ratio(const NormalFormGame& game, std::span<const StrategyProfile> profiles, const char* metric);

}  // namespace misinfo
