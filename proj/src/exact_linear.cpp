#include "exact_linear.hpp"

#include <algorithm>

namespace misinfo::detail {

LinearSolve solve_exact(const std::vector<LinearRow>& rows, std::size_t unknowns) {
  std::vector<std::vector<Rational>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    auto row = r.coeffs;
    row.push_back(r.rhs);
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < unknowns && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    Rational inv = Rational(1) / m[rank][col];
    for (std::size_t c = col; c <= unknowns; ++c) m[rank][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c <= unknowns; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < m.size(); ++r)
    if (!m[r][unknowns].is_zero()) return {LinearSolve::Kind::Inconsistent, rank, {}};
  if (rank < unknowns) return {LinearSolve::Kind::Underdetermined, rank, {}};
  std::vector<Rational> z(unknowns);
  for (std::size_t r = 0; r < rank; ++r) z[pivot_col[r]] = m[r][unknowns];
  return {LinearSolve::Kind::Unique, rank, std::move(z)};
}

namespace {

bool satisfies(const std::vector<LinearRow>& ineq, const std::vector<Rational>& z) {
  for (const auto& row : ineq) {
    Rational lhs;
    for (std::size_t k = 0; k < z.size(); ++k)
      if (!row.coeffs[k].is_zero()) lhs += row.coeffs[k] * z[k];
    if (lhs > row.rhs) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<Rational>> polytope_vertices(const std::vector<LinearRow>& equalities,
                                                     const std::vector<LinearRow>& inequalities,
                                                     std::size_t unknowns) {
  std::vector<std::vector<Rational>> out;
  LinearSolve base = solve_exact(equalities, unknowns);
  if (base.kind == LinearSolve::Kind::Inconsistent) return out;
  if (base.kind == LinearSolve::Kind::Unique) {
    if (satisfies(inequalities, base.solution)) out.push_back(std::move(base.solution));
    return out;
  }
  // Each vertex makes enough inequalities tight to pin the remaining freedom.
  const std::size_t need = unknowns - base.rank;
  const std::size_t m = inequalities.size();
  if (need > m) return out;
  std::vector<bool> choose(m, false);
  std::fill(choose.begin(), choose.begin() + static_cast<long>(need), true);
  do {
    std::vector<LinearRow> rows = equalities;
    for (std::size_t k = 0; k < m; ++k)
      if (choose[k]) rows.push_back(inequalities[k]);
    LinearSolve s = solve_exact(rows, unknowns);
    if (s.kind == LinearSolve::Kind::Unique && satisfies(inequalities, s.solution) &&
        std::find(out.begin(), out.end(), s.solution) == out.end())
      out.push_back(std::move(s.solution));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

}  // namespace misinfo::detail
