#include "misinfo/welfare.hpp"

#include "misinfo/error.hpp"

namespace misinfo {

namespace {

void check_fits(const NormalFormGame& game, const StrategyProfile& profile) {
  if (!profile.fits(game))
    throw Error(ErrorKind::ShapeMismatch, "profile does not match game of shape " + game.shape_string());
}

// Visits every cell of the product of the given per-player strategy lists.
template <class Fn>
void for_each_cell(const NormalFormGame& game, const std::vector<std::vector<std::size_t>>& sup, Fn fn) {
  const std::size_t n = sup.size();
  std::vector<std::size_t> pick(n, 0), chosen(n);
  while (true) {
    std::size_t cell = 0;
    for (std::size_t i = 0; i < n; ++i) {
      chosen[i] = sup[i][pick[i]];
      cell += chosen[i] * game.stride(i);
    }
    fn(cell, chosen);
    std::size_t i = n;
    while (true) {
      if (i == 0) return;
      --i;
      if (++pick[i] < sup[i].size()) break;
      pick[i] = 0;
    }
  }
}

// Expectation of `player`'s payoff; a non-negative `pinned` fixes that
// player's strategy to `pinned_strategy`.
Number expect(const NormalFormGame& game, const StrategyProfile& profile, std::size_t player, long pinned,
              std::size_t pinned_strategy) {
  check_fits(game, profile);
  if (player >= game.num_players()) throw Error(ErrorKind::InvalidArgument, "player index out of range");
  const std::size_t n = game.num_players();
  std::vector<std::vector<std::size_t>> sup(n);
  for (std::size_t i = 0; i < n; ++i)
    sup[i] = static_cast<long>(i) == pinned ? std::vector<std::size_t>{pinned_strategy} : profile[i].support(0.0);

  if (profile.is_exact()) {
    Rational total;
    for_each_cell(game, sup, [&](std::size_t cell, const std::vector<std::size_t>& s) {
      Rational w = game.payoff(cell, player);
      for (std::size_t i = 0; i < n; ++i)
        if (static_cast<long>(i) != pinned) w *= profile[i].exact()[s[i]];
      total += w;
    });
    return total;
  }
  double total = 0;
  for_each_cell(game, sup, [&](std::size_t cell, const std::vector<std::size_t>& s) {
    double w = game.payoff(cell, player).to_double();
    for (std::size_t i = 0; i < n; ++i)
      if (static_cast<long>(i) != pinned) w *= profile[i].values()[s[i]];
    total += w;
  });
  return total;
}

}  // namespace

Number expected_payoff(const NormalFormGame& game, const StrategyProfile& profile, std::size_t player) {
  return expect(game, profile, player, -1, 0);
}

Number deviation_payoff(const NormalFormGame& game, const StrategyProfile& profile, std::size_t player,
                        std::size_t strategy) {
  if (player >= game.num_players() || strategy >= game.strategy_count(player))
    throw Error(ErrorKind::InvalidArgument, "deviation index out of range");
  return expect(game, profile, player, static_cast<long>(player), strategy);
}

Number social_welfare(const NormalFormGame& game, const StrategyProfile& profile) {
  check_fits(game, profile);
  if (profile.is_exact()) {
    Rational sum;
    for (std::size_t i = 0; i < game.num_players(); ++i) sum += expected_payoff(game, profile, i).exact();
    return sum;
  }
  double sum = 0;
  for (std::size_t i = 0; i < game.num_players(); ++i) sum += expected_payoff(game, profile, i).to_double();
  return sum;
}

SocialOptimum social_optimum(const NormalFormGame& game) {
  SocialOptimum best{game.position(0), Rational()};
  for (std::size_t c = 0; c < game.num_cells(); ++c) {
    Rational sw;
    for (const auto& p : game.cell(c)) sw += p;
    if (c == 0 || sw > best.value) best = {game.position(c), sw};
  }
  return best;
}

Number welfare_ratio(const NormalFormGame& game, std::span<const StrategyProfile> profiles, const char* metric) {
  if (profiles.empty())
    throw Error(ErrorKind::EmptyEquilibria, std::string(metric) + " needs a non-empty profile set");
  Rational opt = social_optimum(game).value;
  bool exact = true;
  for (const auto& p : profiles) exact = exact && p.is_exact();
  if (exact) {
    Rational worst = social_welfare(game, profiles.front()).exact();
    for (const auto& p : profiles) worst = std::min(worst, social_welfare(game, p).exact());
    if (worst.sign() <= 0)
      throw Error(ErrorKind::UndefinedMetric,
                  std::string(metric) + " undefined: worst social welfare " + worst.str() + " is not positive");
    return opt / worst;
  }
  double worst = social_welfare(game, profiles.front()).to_double();
  for (const auto& p : profiles) worst = std::min(worst, social_welfare(game, p).to_double());
  if (worst <= 0)
    throw Error(ErrorKind::UndefinedMetric, std::string(metric) + " undefined: worst social welfare is not positive");
  return opt.to_double() / worst;
}

Number price_of_anarchy(const NormalFormGame& game, std::span<const StrategyProfile> equilibria) {
  return welfare_ratio(game, equilibria, "price of anarchy");
}

}  // namespace misinfo
