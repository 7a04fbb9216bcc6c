#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "misinfo/game.hpp"
#include "misinfo/nash.hpp"
#include "misinfo/profile.hpp"

namespace misinfo {

// The actual game plus one subjective view per player.
struct MisinformationGame {
  NormalFormGame actual;
  std::vector<NormalFormGame> subjective;

  std::size_t num_players() const { return actual.num_players(); }
  std::size_t num_positions() const { return actual.num_positions(); }
  std::size_t hash() const;
  friend bool operator==(const MisinformationGame& a, const MisinformationGame& b) {
    return a.actual == b.actual && a.subjective == b.subjective;
  }
};

// Sorted, duplicate-free set of positions, stored as flat cell indices of the
// canonical shape (row-major cell order coincides with lexicographic order of
// positions).
class PositionSet {
 public:
  PositionSet() = default;
  static PositionSet from_cells(std::vector<std::size_t> cells);

  bool contains(std::size_t cell) const;
  PositionSet with(std::size_t cell) const;
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::vector<std::size_t>& cells() const { return cells_; }
  std::vector<Position> positions(const NormalFormGame& shape) const;
  std::string str(const NormalFormGame& shape, int base = 0) const;
  std::size_t hash() const;

  auto operator<=>(const PositionSet&) const = default;
  bool operator==(const PositionSet&) const = default;

 private:
  std::vector<std::size_t> cells_;
};

// All N+1 games share the actual game's shape and there is exactly one
// subjective game per player.
bool is_canonical(const MisinformationGame& mg);

// Appends a subjective game obtained by inflating the empty game.
MisinformationGame add_game(const MisinformationGame& mg, std::size_t target_players,
                            const std::vector<std::size_t>& target_counts);

// Pads every game to the union shape (players and per-player strategy
// counts), adding a subjective game for every player the actual game lacks.
MisinformationGame inflation_process(const MisinformationGame& mg);

// Replaces every subjective cell at v with the actual game's cell.
MisinformationGame update(const MisinformationGame& mg, const Position& v);
MisinformationGame update_cell(const MisinformationGame& mg, std::size_t cell);
MisinformationGame update_set(const MisinformationGame& mg, const PositionSet& xs);
// Whether update(mg, cell) would change anything.
bool update_changes(const MisinformationGame& mg, std::size_t cell);

bool mg_equal(const MisinformationGame& a, const MisinformationGame& b);

// Natural misinformed equilibria: product over players of their components of
// the equilibria of their own subjective game.
std::vector<StrategyProfile> nme(const MisinformationGame& mg, const SolverOptions& opts = {});

// Union of the characteristic sets of the given profiles, as sorted cells.
std::vector<std::size_t> characteristic_cells(const NormalFormGame& shape, const std::vector<StrategyProfile>& profiles,
                                              double eps = kSupportEpsilon);
std::vector<std::size_t> characteristic_cells(const NormalFormGame& shape, const StrategyProfile& profile,
                                              double eps = kSupportEpsilon);

// SW(opt of actual) / min over NME of SW under the actual game.
Number price_of_misinformation(const MisinformationGame& mg, const SolverOptions& opts = {});
Number price_of_misinformation(const MisinformationGame& mg, const std::vector<StrategyProfile>& nmes);

// Hex digest of the payoff tensors, stable across runs and platforms.
std::string stable_hash(const MisinformationGame& mg);

}  // namespace misinfo
