#include "misinfo/game.hpp"

#include <sstream>

#include "misinfo/error.hpp"

namespace misinfo {

std::string Position::str(int base) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) os << ',';
    os << indices[i] + static_cast<std::size_t>(base);
  }
  os << ')';
  return os.str();
}

NormalFormGame::NormalFormGame() { init_strides(); }

NormalFormGame::NormalFormGame(std::vector<std::size_t> strategy_counts, std::vector<Rational> flat_payoffs)
    : counts_(std::move(strategy_counts)), payoffs_(std::move(flat_payoffs)) {
  for (std::size_t c : counts_)
    if (c == 0) throw Error(ErrorKind::InvalidArgument, "every player needs at least one strategy");
  init_strides();
  if (payoffs_.size() != cells_ * counts_.size())
    throw Error(ErrorKind::ShapeMismatch, "payoff tensor of shape " + shape_string() + " needs " +
                                              std::to_string(cells_ * counts_.size()) + " entries, got " +
                                              std::to_string(payoffs_.size()));
}

void NormalFormGame::init_strides() {
  strides_.assign(counts_.size(), 1);
  cells_ = 1;
  for (std::size_t i = counts_.size(); i-- > 0;) {
    strides_[i] = cells_;
    cells_ *= counts_[i];
  }
}

NormalFormGame NormalFormGame::filled(std::vector<std::size_t> strategy_counts, const Rational& value) {
  std::size_t cells = 1;
  for (auto c : strategy_counts) cells *= c;
  std::vector<Rational> flat(cells * strategy_counts.size(), value);
  return NormalFormGame(std::move(strategy_counts), std::move(flat));
}

NormalFormGame NormalFormGame::bimatrix(const std::vector<std::vector<std::pair<Rational, Rational>>>& rows) {
  if (rows.empty() || rows.front().empty()) throw Error(ErrorKind::InvalidArgument, "empty bimatrix");
  std::size_t n = rows.front().size();
  std::vector<Rational> flat;
  flat.reserve(rows.size() * n * 2);
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::ShapeMismatch, "ragged bimatrix");
    for (const auto& [a, b] : row) {
      flat.push_back(a);
      flat.push_back(b);
    }
  }
  return NormalFormGame({rows.size(), n}, std::move(flat));
}

bool NormalFormGame::contains(const Position& p) const {
  if (p.size() != counts_.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] >= counts_[i]) return false;
  return true;
}

std::size_t NormalFormGame::cell_index(const Position& p) const {
  if (!contains(p))
    throw Error(ErrorKind::InvalidArgument, "position " + p.str() + " outside game of shape " + shape_string());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < p.size(); ++i) idx += p[i] * strides_[i];
  return idx;
}

Position NormalFormGame::position(std::size_t cell) const {
  if (cell >= cells_) throw Error(ErrorKind::InvalidArgument, "cell index out of range");
  Position p;
  p.indices.resize(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    p[i] = cell / strides_[i];
    cell %= strides_[i];
  }
  return p;
}

void NormalFormGame::set_payoff(std::size_t cell, std::size_t player, Rational value) {
  if (cell >= cells_ || player >= counts_.size())
    throw Error(ErrorKind::InvalidArgument, "payoff index out of range");
  payoffs_[cell * counts_.size() + player] = std::move(value);
}

void NormalFormGame::set_cell(std::size_t cell, std::span<const Rational> values) {
  if (values.size() != counts_.size()) throw Error(ErrorKind::ShapeMismatch, "cell vector length mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) set_payoff(cell, i, values[i]);
}

std::string NormalFormGame::shape_string() const {
  if (counts_.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(counts_[i]);
  }
  return s;
}

std::size_t NormalFormGame::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) { h = (h ^ v) * 0x100000001b3ULL; };
  for (auto c : counts_) mix(c);
  for (const auto& r : payoffs_) mix(r.hash());
  return h;
}

}  // namespace misinfo
