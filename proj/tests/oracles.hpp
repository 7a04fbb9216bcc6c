#pragma once
// Independent reference computations for the tests. Nothing here calls the
// library's solvers, welfare or update code; only the data types are shared.
#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "misinfo/game.hpp"
#include "misinfo/misinfo_game.hpp"
#include "misinfo/profile.hpp"
#include "misinfo/rational.hpp"

namespace oracle {

using misinfo::MisinformationGame;
using misinfo::NormalFormGame;
using misinfo::Position;
using misinfo::Rational;
using misinfo::StrategyProfile;

// Walks every pure profile with an odometer, last player fastest.
template <class F>
void for_each_profile(const std::vector<std::size_t>& counts, F&& f) {
  std::vector<std::size_t> idx(counts.size(), 0);
  while (true) {
    f(idx);
    std::size_t k = counts.size();
    while (k > 0) {
      --k;
      if (++idx[k] < counts[k]) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (counts.empty()) return;
  }
}

inline Rational prob(const StrategyProfile& s, std::size_t player, std::size_t j) {
  return s[player].exact()[j];
}

// Brute-force expectation over the whole tensor, zero-probability cells included.
inline Rational expected(const NormalFormGame& g, const StrategyProfile& s, std::size_t player) {
  Rational total;
  for_each_profile(g.strategy_counts(), [&](const std::vector<std::size_t>& idx) {
    Rational w(1);
    for (std::size_t i = 0; i < idx.size(); ++i) w = w * prob(s, i, idx[i]);
    total = total + w * g.payoff(Position(idx), player);
  });
  return total;
}

inline Rational welfare(const NormalFormGame& g, const StrategyProfile& s) {
  Rational sw;
  for (std::size_t i = 0; i < g.num_players(); ++i) sw = sw + expected(g, s, i);
  return sw;
}

inline StrategyProfile with_pure(const NormalFormGame& g, const StrategyProfile& s, std::size_t player,
                                 std::size_t strategy) {
  std::vector<std::vector<Rational>> probs;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    if (i == player) {
      std::vector<Rational> p(g.strategy_count(i));
      p[strategy] = Rational(1);
      probs.push_back(p);
    } else {
      probs.push_back(s[i].exact());
    }
  }
  return StrategyProfile::exact(probs);
}

// True iff no player gains by a pure deviation (exact arithmetic).
inline bool best_response_ok(const NormalFormGame& g, const StrategyProfile& s) {
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    Rational base = expected(g, s, i);
    for (std::size_t j = 0; j < g.strategy_count(i); ++j)
      if (expected(g, with_pure(g, s, i, j), i) > base) return false;
  }
  return true;
}

inline Rational social_optimum(const NormalFormGame& g) {
  std::optional<Rational> best;
  for_each_profile(g.strategy_counts(), [&](const std::vector<std::size_t>& idx) {
    Rational sw;
    for (std::size_t i = 0; i < g.num_players(); ++i) sw = sw + g.payoff(Position(idx), i);
    if (!best || sw > *best) best = sw;
  });
  return *best;
}

// Closed-form equilibria of a 2x2 bimatrix game. Returns nullopt when a payoff
// tie allows a continuum, so callers only compare on generic games.
inline std::optional<std::vector<StrategyProfile>> nash_2x2(const NormalFormGame& g) {
  auto a = [&](std::size_t r, std::size_t c) { return g.payoff(Position{r, c}, 0); };
  auto b = [&](std::size_t r, std::size_t c) { return g.payoff(Position{r, c}, 1); };
  // Ties between the two strategies of one player against a pure opponent.
  for (std::size_t c = 0; c < 2; ++c)
    if (a(0, c) == a(1, c)) return std::nullopt;
  for (std::size_t r = 0; r < 2; ++r)
    if (b(r, 0) == b(r, 1)) return std::nullopt;
  std::vector<StrategyProfile> out;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      if (a(r, c) > a(1 - r, c) && b(r, c) > b(r, 1 - c)) out.push_back(StrategyProfile::pure({2, 2}, {r, c}));
  // Interior equilibrium: each player makes the other indifferent.
  Rational dq = a(0, 0) - a(1, 0) - a(0, 1) + a(1, 1);
  Rational dp = b(0, 0) - b(0, 1) - b(1, 0) + b(1, 1);
  if (!dq.is_zero() && !dp.is_zero()) {
    Rational q = (a(1, 1) - a(0, 1)) / dq;  // column plays s1 with q
    Rational p = (b(1, 1) - b(1, 0)) / dp;  // row plays s1 with p
    if (q > Rational(0) && q < Rational(1) && p > Rational(0) && p < Rational(1))
      out.push_back(StrategyProfile::exact({{p, Rational(1) - p}, {q, Rational(1) - q}}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Cell-wise rewrite of every subjective view at one position.
inline MisinformationGame naive_update(const MisinformationGame& mg, const Position& v) {
  MisinformationGame out = mg;
  for (auto& view : out.subjective)
    for (std::size_t i = 0; i < view.num_players(); ++i) view.set_payoff(view.cell_index(v), i, mg.actual.payoff(v, i));
  return out;
}

inline NormalFormGame random_game(std::mt19937_64& rng, const std::vector<std::size_t>& counts, long lo = -10,
                                  long hi = 10) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::size_t cells = 1;
  for (auto c : counts) cells *= c;
  std::vector<Rational> flat(cells * counts.size());
  for (auto& x : flat) x = Rational(d(rng));
  return NormalFormGame(counts, std::move(flat));
}

inline MisinformationGame random_misinfo(std::mt19937_64& rng, const std::vector<std::size_t>& counts, long lo = -10,
                                         long hi = 10) {
  MisinformationGame mg{random_game(rng, counts, lo, hi), {}};
  for (std::size_t i = 0; i < counts.size(); ++i) mg.subjective.push_back(random_game(rng, counts, lo, hi));
  return mg;
}

}  // namespace oracle
