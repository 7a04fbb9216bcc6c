#include "misinfo/inflation.hpp"

#include <algorithm>

#include "misinfo/error.hpp"

namespace misinfo {

bool compatible(const NormalFormGame& g, const StrategyProfile& sigma, const NormalFormGame& g2,
                const StrategyProfile& sigma2) {
  const std::size_t n = std::min(g.num_players(), g2.num_players());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = std::min(g.strategy_count(i), g2.strategy_count(i));
    const auto& a = sigma[i];
    const auto& b = sigma2[i];
    for (std::size_t j = 0; j < m; ++j) {
      if (a.is_exact() && b.is_exact()) {
        if (a.exact()[j] != b.exact()[j]) return false;
      } else if (a.values()[j] != b.values()[j]) {
        return false;
      }
    }
  }
  return true;
}

NormalFormGame add_player(const NormalFormGame& game) {
  const std::size_t n = game.num_players();
  auto counts = game.strategy_counts();
  counts.push_back(1);
  std::vector<Rational> flat;
  flat.reserve(game.num_cells() * (n + 1));
  for (std::size_t c = 0; c < game.num_cells(); ++c) {
    auto cell = game.cell(c);
    flat.insert(flat.end(), cell.begin(), cell.end());
    flat.emplace_back(0);
  }
  return NormalFormGame(std::move(counts), std::move(flat));
}

NormalFormGame add_strategy(const NormalFormGame& game, std::size_t player) {
  if (player >= game.num_players()) throw Error(ErrorKind::InvalidArgument, "no such player");
  Rational m(-1);
  const auto& all = game.flat_payoffs();
  if (!all.empty()) m = *std::min_element(all.begin(), all.end()) - Rational(1);

  auto counts = game.strategy_counts();
  counts[player] += 1;
  NormalFormGame out = NormalFormGame::filled(counts, m);
  for (std::size_t c = 0; c < game.num_cells(); ++c) {
    Position p = game.position(c);
    out.set_cell(out.cell_index(p), game.cell(c));
  }
  return out;
}

NormalFormGame inflate_game(const NormalFormGame& game, std::size_t target_players,
                            const std::vector<std::size_t>& target_counts) {
  if (target_players < game.num_players() || target_counts.size() != target_players)
    throw Error(ErrorKind::InvalidArgument, "inflation target " + std::to_string(target_players) +
                                                " players does not contain game of shape " + game.shape_string());
  for (std::size_t i = 0; i < target_players; ++i) {
    std::size_t have = i < game.num_players() ? game.strategy_count(i) : 1;
    if (target_counts[i] < have)
      throw Error(ErrorKind::InvalidArgument, "inflation target has fewer strategies than the game");
  }
  NormalFormGame out = game;
  while (out.num_players() < target_players) out = add_player(out);
  for (std::size_t i = 0; i < target_players; ++i)
    while (out.strategy_count(i) < target_counts[i]) out = add_strategy(out, i);
  return out;
}

namespace {

InflationReport violation(int bullet, std::string detail) {
  InflationReport r;
  r.is_inflated = false;
  r.violated_bullet = bullet;
  r.detail = std::move(detail);
  return r;
}

std::vector<StrategyProfile> equilibria_for_check(const NormalFormGame& g, bool pure_only) {
  if (pure_only) {
    std::vector<StrategyProfile> out;
    for (const auto& p : pure_nash(g)) out.push_back(StrategyProfile::pure(g.strategy_counts(), p));
    return out;
  }
  EquilibriumSet es = all_nash(g);
  if (es.degenerate)
    throw Error(ErrorKind::Degenerate, "cannot certify equilibrium correspondence: game of shape " +
                                          g.shape_string() + " has a continuum of equilibria");
  return es.profiles;
}

}  // namespace

InflationReport is_inflated_version(const NormalFormGame& g, const NormalFormGame& g2) {
  const std::size_t n = g.num_players(), n2 = g2.num_players();
  if (n > n2) return violation(1, "inflated game has fewer players");
  for (std::size_t i = 0; i < n; ++i)
    if (g.strategy_count(i) > g2.strategy_count(i))
      return violation(2, "player " + std::to_string(i) + " has fewer strategies in the inflated game");

  // Every profile of g2 whose first n coordinates lie in g must pay the common
  // players what g pays them.
  for (std::size_t c = 0; c < g2.num_cells(); ++c) {
    Position p2 = g2.position(c);
    Position p(std::vector<std::size_t>(p2.indices.begin(), p2.indices.begin() + static_cast<long>(n)));
    if (!g.contains(p)) continue;
    std::size_t c1 = g.cell_index(p);
    for (std::size_t i = 0; i < n; ++i) {
      if (g.payoff(c1, i) != g2.payoff(c, i)) {
        auto r = violation(3, "payoff of player " + std::to_string(i) + " differs at " + p2.str());
        r.witness = std::make_pair(StrategyProfile::pure(g.strategy_counts(), p),
                                   StrategyProfile::pure(g2.strategy_counts(), p2));
        return r;
      }
    }
  }

  const bool pure_only = n != 2 || n2 != 2;
  auto ne = equilibria_for_check(g, pure_only);
  auto ne2 = equilibria_for_check(g2, pure_only);
  for (const auto& s : ne) {
    bool ok = std::any_of(ne2.begin(), ne2.end(), [&](const auto& s2) { return compatible(g, s, g2, s2); });
    if (!ok) {
      auto r = violation(4, "equilibrium " + s.str() + " has no compatible counterpart");
      r.pure_only = pure_only;
      return r;
    }
  }
  for (const auto& s2 : ne2) {
    auto it = std::find_if(ne.begin(), ne.end(), [&](const auto& s) { return compatible(g, s, g2, s2); });
    if (it == ne.end()) {
      auto r = violation(5, "equilibrium " + s2.str() + " of the inflated game has no compatible counterpart");
      r.pure_only = pure_only;
      return r;
    }
  }
  InflationReport ok;
  ok.pure_only = pure_only;
  return ok;
}

}  // namespace misinfo
