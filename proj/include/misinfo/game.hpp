#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "misinfo/rational.hpp"

namespace misinfo {

// Pure strategy profile; also used as an index into payoff tensors.
struct Position {
  std::vector<std::size_t> indices;

  Position() = default;
  explicit Position(std::vector<std::size_t> idx) : indices(std::move(idx)) {}
  Position(std::initializer_list<std::size_t> idx) : indices(idx) {}

  std::size_t size() const { return indices.size(); }
  std::size_t operator[](std::size_t i) const { return indices[i]; }
  std::size_t& operator[](std::size_t i) { return indices[i]; }
  auto operator<=>(const Position&) const = default;
  bool operator==(const Position&) const = default;

  // "(2,1)" style text; base selects 0- or 1-based indices.
  std::string str(int base = 0) const;
};

using PureProfile = Position;

// Finite normal-form game with a dense payoff tensor. Cells are stored in
// row-major order (the last player's strategy varies fastest); each cell holds
// one payoff per player.
class NormalFormGame {
 public:
  // The empty game: no players and a single cell with an empty payoff vector.
  NormalFormGame();
  NormalFormGame(std::vector<std::size_t> strategy_counts, std::vector<Rational> flat_payoffs);

  static NormalFormGame filled(std::vector<std::size_t> strategy_counts, const Rational& value);
  // Two-player convenience: rows[r][c] = {payoff of player 1, payoff of player 2}.
  static NormalFormGame bimatrix(const std::vector<std::vector<std::pair<Rational, Rational>>>& rows);

  std::size_t num_players() const { return counts_.size(); }
  const std::vector<std::size_t>& strategy_counts() const { return counts_; }
  std::size_t strategy_count(std::size_t player) const { return counts_.at(player); }
  std::size_t num_cells() const { return cells_; }
  // Number of pure profiles, |S|.
  std::size_t num_positions() const { return cells_; }

  std::size_t cell_index(const Position& p) const;
  Position position(std::size_t cell) const;
  std::size_t stride(std::size_t player) const { return strides_[player]; }
  bool contains(const Position& p) const;

  const Rational& payoff(std::size_t cell, std::size_t player) const {
    return payoffs_[cell * counts_.size() + player];
  }
  const Rational& payoff(const Position& p, std::size_t player) const {
    return payoff(cell_index(p), player);
  }
  std::span<const Rational> cell(std::size_t cell) const {
    return {payoffs_.data() + cell * counts_.size(), counts_.size()};
  }
  std::span<const Rational> cell(const Position& p) const { return cell(cell_index(p)); }
  const std::vector<Rational>& flat_payoffs() const { return payoffs_; }

  void set_payoff(std::size_t cell, std::size_t player, Rational value);
  void set_cell(std::size_t cell, std::span<const Rational> values);

  bool same_shape(const NormalFormGame& o) const { return counts_ == o.counts_; }
  std::string shape_string() const;
  std::size_t hash() const;

  friend bool operator==(const NormalFormGame& a, const NormalFormGame& b) {
    return a.counts_ == b.counts_ && a.payoffs_ == b.payoffs_;
  }

 private:
  void init_strides();

  std::vector<std::size_t> counts_;
  std::vector<std::size_t> strides_;
  std::size_t cells_ = 1;
  std::vector<Rational> payoffs_;
};

}  // namespace misinfo
