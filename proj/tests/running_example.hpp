#pragma once
// The two-player running example and its hand-derived adaptation, frozen.
// Position sets below are 0-based cells of the 2x2 tensor: (r,c) -> 2r+c.
#include "misinfo/misinfo_game.hpp"

namespace example {

using misinfo::MisinformationGame;
using misinfo::NormalFormGame;
using misinfo::PositionSet;

inline NormalFormGame actual() { return NormalFormGame::bimatrix({{{6, 6}, {2, 7}}, {{7, 2}, {1, 1}}}); }
inline NormalFormGame view1() { return NormalFormGame::bimatrix({{{2, 2}, {0, 3}}, {{3, 0}, {1, 1}}}); }
inline NormalFormGame view2() { return NormalFormGame::bimatrix({{{-1, 1}, {2, -2}}, {{1, -1}, {0, 0}}}); }

inline MisinformationGame root() { return {actual(), {view1(), view2()}}; }

// Views after learning the bottom-left cell.
inline MisinformationGame learned_bottom_left() {
  return {actual(),
          {NormalFormGame::bimatrix({{{2, 2}, {0, 3}}, {{7, 2}, {1, 1}}}),
           NormalFormGame::bimatrix({{{-1, 1}, {2, -2}}, {{7, 2}, {0, 0}}})}};
}

// Views after learning the bottom-right cell.
inline MisinformationGame learned_bottom_right() {
  return {actual(),
          {NormalFormGame::bimatrix({{{2, 2}, {0, 3}}, {{3, 0}, {1, 1}}}),
           NormalFormGame::bimatrix({{{-1, 1}, {2, -2}}, {{1, -1}, {1, 1}}})}};
}

// Views after learning the whole bottom row.
inline MisinformationGame learned_bottom_row() {
  return {actual(),
          {NormalFormGame::bimatrix({{{2, 2}, {0, 3}}, {{7, 2}, {1, 1}}}),
           NormalFormGame::bimatrix({{{-1, 1}, {2, -2}}, {{7, 2}, {1, 1}}})}};
}

inline PositionSet bottom_left() { return PositionSet::from_cells({2}); }
inline PositionSet bottom_right() { return PositionSet::from_cells({3}); }
inline PositionSet bottom_row() { return PositionSet::from_cells({2, 3}); }

}  // namespace example
