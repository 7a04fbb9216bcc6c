#include "misinfo/nash.hpp"

#include <algorithm>
#include <set>

#include "exact_linear.hpp"
#include "misinfo/error.hpp"
#include "misinfo/welfare.hpp"

namespace misinfo {

std::vector<Position> pure_nash(const NormalFormGame& game) {
  std::vector<Position> out;
  const std::size_t n = game.num_players();
  for (std::size_t c = 0; c < game.num_cells(); ++c) {
    Position p = game.position(c);
    bool stable = true;
    for (std::size_t i = 0; i < n && stable; ++i) {
      const Rational& own = game.payoff(c, i);
      std::size_t base = c - p[i] * game.stride(i);
      for (std::size_t s = 0; s < game.strategy_count(i); ++s) {
        if (game.payoff(base + s * game.stride(i), i) > own) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(std::move(p));
  }
  return out;
}

namespace {

using detail::LinearRow;

std::vector<std::size_t> bits(unsigned mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k)
    if (mask & (1u << k)) out.push_back(k);
  return out;
}

// Opponent strategies y with support inside `opp` that make every strategy in
// `own` a best response for the owner. Unknowns: y restricted to `opp`, then
// the owner's best-response value. Returns full-length vertices.
std::vector<std::vector<Rational>> best_response_face(const NormalFormGame& game, std::size_t owner,
                                                      const std::vector<std::size_t>& own,
                                                      const std::vector<std::size_t>& opp) {
  const std::size_t other = 1 - owner;
  const std::size_t own_count = game.strategy_count(owner);
  const std::size_t opp_count = game.strategy_count(other);
  const std::size_t dim = opp.size() + 1;
  auto payoff = [&](std::size_t k, std::size_t j) -> const Rational& {
    std::size_t cell = k * game.stride(owner) + j * game.stride(other);
    return game.payoff(cell, owner);
  };
  auto value_row = [&](std::size_t k) {
    LinearRow row{std::vector<Rational>(dim), Rational()};
    for (std::size_t t = 0; t < opp.size(); ++t) row.coeffs[t] = payoff(k, opp[t]);
    row.coeffs[dim - 1] = -1;
    return row;
  };

  std::vector<LinearRow> eq, ineq;
  for (std::size_t k : own) eq.push_back(value_row(k));
  LinearRow total{std::vector<Rational>(dim, Rational(1)), Rational(1)};
  total.coeffs[dim - 1] = 0;
  eq.push_back(std::move(total));
  for (std::size_t t = 0; t < opp.size(); ++t) {
    LinearRow nonneg{std::vector<Rational>(dim), Rational()};
    nonneg.coeffs[t] = -1;
    ineq.push_back(std::move(nonneg));
  }
  for (std::size_t k = 0; k < own_count; ++k)
    if (!std::binary_search(own.begin(), own.end(), k)) ineq.push_back(value_row(k));

  std::vector<std::vector<Rational>> out;
  for (auto& z : detail::polytope_vertices(eq, ineq, dim)) {
    std::vector<Rational> y(opp_count);
    for (std::size_t t = 0; t < opp.size(); ++t) y[opp[t]] = z[t];
    out.push_back(std::move(y));
  }
  return out;
}

}  // namespace

EquilibriumSet support_enumeration_2p(const NormalFormGame& game) {
  if (game.num_players() != 2)
    throw Error(ErrorKind::InvalidArgument, "support enumeration needs a two-player game");
  const std::size_t m = game.strategy_count(0), n = game.strategy_count(1);
  if (m > 20 || n > 20) throw Error(ErrorKind::CapExceeded, "support enumeration limited to 20 strategies");
  EquilibriumSet out;
  std::set<StrategyProfile> found;
  // For supports (I, J): player 2's strategy must make I best responses for
  // player 1 and vice versa. Both faces are polytopes and every pair of their
  // points is an equilibrium, so more than one vertex means a continuum.
  for (unsigned im = 1; im < (1u << m); ++im) {
    auto rows = bits(im, m);
    for (unsigned jm = 1; jm < (1u << n); ++jm) {
      auto cols = bits(jm, n);
      auto ys = best_response_face(game, 0, rows, cols);
      if (ys.empty()) continue;
      auto xs = best_response_face(game, 1, cols, rows);
      if (xs.empty()) continue;
      if (xs.size() > 1 || ys.size() > 1) out.degenerate = true;
      for (const auto& x : xs)
        for (const auto& y : ys) found.insert(StrategyProfile::exact({x, y}));
    }
  }
  out.profiles.assign(found.begin(), found.end());
  return out;
}

bool is_nash(const NormalFormGame& game, const StrategyProfile& profile, double tol) {
  if (!profile.fits(game)) return false;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    Number own = expected_payoff(game, profile, i);
    for (std::size_t s = 0; s < game.strategy_count(i); ++s) {
      Number dev = deviation_payoff(game, profile, i, s);
      if (own.is_exact() && dev.is_exact()) {
        if (dev.exact() > own.exact()) return false;
      } else if (dev.to_double() - own.to_double() > tol) {
        return false;
      }
    }
  }
  return true;
}

EquilibriumSet all_nash(const NormalFormGame& game, const SolverOptions& opts) {
  const std::size_t n = game.num_players();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "game has no players");
  if (n == 2) return support_enumeration_2p(game);
  EquilibriumSet out;
  if (n == 1) {
    Rational best = game.payoff(0, 0);
    for (std::size_t c = 1; c < game.num_cells(); ++c) best = std::max(best, game.payoff(c, 0));
    for (std::size_t c = 0; c < game.num_cells(); ++c)
      if (game.payoff(c, 0) == best) out.profiles.push_back(StrategyProfile::pure(game.strategy_counts(), game.position(c)));
    out.degenerate = out.profiles.size() > 1;
    return out;
  }
  EquilibriumSet numeric = nash_numeric(game, opts);
  out.mode = EquilibriumSet::Mode::Numeric;
  out.degenerate = numeric.degenerate;
  out.unconverged_supports = numeric.unconverged_supports;
  for (const auto& p : pure_nash(game)) out.profiles.push_back(StrategyProfile::pure(game.strategy_counts(), p));
  for (const auto& p : numeric.profiles) {
    bool dup = std::any_of(out.profiles.begin(), out.profiles.end(),
                           [&](const StrategyProfile& q) { return q.approx_equal(p, opts.dedupe_tol); });
    if (!dup) out.profiles.push_back(p);
  }
  std::sort(out.profiles.begin(), out.profiles.end());
  return out;
}

}  // namespace misinfo
