#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "misinfo/game.hpp"
#include "misinfo/rational.hpp"

namespace misinfo {

inline constexpr double kSupportEpsilon = 1e-7;
inline constexpr double kNumericSumTolerance = 1e-9;

// Probability vector over one player's strategies, held exactly (rationals)
// or numerically (doubles). Exact strategies also carry a double copy.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<Rational> probs);
  explicit MixedStrategy(std::vector<double> probs);
  static MixedStrategy pure(std::size_t num_strategies, std::size_t chosen);

  bool is_exact() const { return exact_mode_; }
  std::size_t size() const { return approx_.size(); }
  const std::vector<Rational>& exact() const;
  const std::vector<double>& values() const { return approx_; }
  Number probability(std::size_t j) const;

  // Strategies played with positive probability: exact positivity for exact
  // strategies, above eps for numeric ones.
  std::vector<std::size_t> support(double eps = kSupportEpsilon) const;

  // Lexicographic comparison of probability vectors (exact when both are exact).
  int compare(const MixedStrategy& o) const;
  bool approx_equal(const MixedStrategy& o, double tol) const;
  std::string str() const;

  friend bool operator==(const MixedStrategy& a, const MixedStrategy& b) { return a.compare(b) == 0; }
  friend bool operator<(const MixedStrategy& a, const MixedStrategy& b) { return a.compare(b) < 0; }

 private:
  MixedStrategy() = default;
  bool exact_mode_ = true;
  std::vector<Rational> exact_;
  std::vector<double> approx_;
};

class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(std::vector<MixedStrategy> strategies) : s_(std::move(strategies)) {}
  static StrategyProfile exact(const std::vector<std::vector<Rational>>& probs);
  static StrategyProfile numeric(const std::vector<std::vector<double>>& probs);
  static StrategyProfile pure(const std::vector<std::size_t>& counts, const Position& p);

  std::size_t num_players() const { return s_.size(); }
  const MixedStrategy& operator[](std::size_t i) const { return s_[i]; }
  const std::vector<MixedStrategy>& strategies() const { return s_; }
  bool is_exact() const;
  bool fits(const NormalFormGame& game) const;

  // If every strategy is pure, the profile it selects.
  bool is_pure() const;
  Position as_position() const;

  int compare(const StrategyProfile& o) const;
  bool approx_equal(const StrategyProfile& o, double tol) const;
  std::string str() const;

  friend bool operator==(const StrategyProfile& a, const StrategyProfile& b) { return a.compare(b) == 0; }
  friend bool operator<(const StrategyProfile& a, const StrategyProfile& b) { return a.compare(b) < 0; }

 private:
  std::vector<MixedStrategy> s_;
};

std::vector<std::size_t> support(const MixedStrategy& s, double eps = kSupportEpsilon);

// Cartesian product of the supports, in lexicographic order.
std::vector<Position> characteristic_set(const StrategyProfile& profile, double eps = kSupportEpsilon);

}  // namespace misinfo
