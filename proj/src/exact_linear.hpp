#pragma once

#include <cstddef>
#include <vector>

#include "misinfo/rational.hpp"

namespace misinfo::detail {

// One linear constraint a·z (=|<=) rhs.
struct LinearRow {
  std::vector<Rational> coeffs;
  Rational rhs;
};

struct LinearSolve {
  enum class Kind { Inconsistent, Unique, Underdetermined } kind;
  std::size_t rank = 0;
  std::vector<Rational> solution;  // filled when Unique
};

LinearSolve solve_exact(const std::vector<LinearRow>& rows, std::size_t unknowns);

// Vertices of the bounded polyhedron {z : eq rows hold, ineq rows a·z <= rhs}.
// Empty when infeasible. Callers guarantee boundedness.
std::vector<std::vector<Rational>> polytope_vertices(const std::vector<LinearRow>& equalities,
                                                     const std::vector<LinearRow>& inequalities,
                                                     std::size_t unknowns);

}  // namespace misinfo::detail
