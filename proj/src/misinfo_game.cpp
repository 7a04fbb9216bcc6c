#include "misinfo/misinfo_game.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "misinfo/error.hpp"
#include "misinfo/inflation.hpp"
#include "misinfo/welfare.hpp"

namespace misinfo {

std::size_t MisinformationGame::hash() const {
  std::size_t h = actual.hash();
  for (const auto& g : subjective) h = (h ^ g.hash()) * 0x100000001b3ULL;
  return h;
}

PositionSet PositionSet::from_cells(std::vector<std::size_t> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  PositionSet s;
  s.cells_ = std::move(cells);
  return s;
}

bool PositionSet::contains(std::size_t cell) const { return std::binary_search(cells_.begin(), cells_.end(), cell); }

PositionSet PositionSet::with(std::size_t cell) const {
  PositionSet s = *this;
  auto it = std::lower_bound(s.cells_.begin(), s.cells_.end(), cell);
  if (it == s.cells_.end() || *it != cell) s.cells_.insert(it, cell);
  return s;
}

std::vector<Position> PositionSet::positions(const NormalFormGame& shape) const {
  std::vector<Position> out;
  out.reserve(cells_.size());
  for (auto c : cells_) out.push_back(shape.position(c));
  return out;
}

std::string PositionSet::str(const NormalFormGame& shape, int base) const {
  std::string s = "{";
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (k) s += ',';
    s += shape.position(cells_[k]).str(base);
  }
  return s + "}";
}

std::size_t PositionSet::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto c : cells_) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

bool is_canonical(const MisinformationGame& mg) {
  if (mg.actual.num_players() == 0 || mg.subjective.size() != mg.actual.num_players()) return false;
  return std::all_of(mg.subjective.begin(), mg.subjective.end(),
                     [&](const NormalFormGame& g) { return g.same_shape(mg.actual); });
}

namespace {

void require_canonical(const MisinformationGame& mg, const char* op) {
  if (!is_canonical(mg))
    throw Error(ErrorKind::NonCanonical,
                std::string(op) + " needs a canonical misinformation game; run inflation_process first");
}

}  // namespace

MisinformationGame add_game(const MisinformationGame& mg, std::size_t target_players,
                            const std::vector<std::size_t>& target_counts) {
  MisinformationGame out = mg;
  out.subjective.push_back(inflate_game(NormalFormGame(), target_players, target_counts));
  return out;
}

MisinformationGame inflation_process(const MisinformationGame& mg) {
  const std::size_t n0 = mg.actual.num_players();
  if (mg.subjective.size() != n0)
    throw Error(ErrorKind::InvalidArgument, "expected one subjective game per player of the actual game (" +
                                                std::to_string(n0) + "), got " +
                                                std::to_string(mg.subjective.size()));
  std::size_t players = n0;
  for (const auto& g : mg.subjective) players = std::max(players, g.num_players());
  std::vector<std::size_t> counts(players, 1);
  auto absorb = [&](const NormalFormGame& g) {
    for (std::size_t i = 0; i < g.num_players(); ++i) counts[i] = std::max(counts[i], g.strategy_count(i));
  };
  absorb(mg.actual);
  for (const auto& g : mg.subjective) absorb(g);

  MisinformationGame out = mg;
  for (std::size_t i = n0; i < players; ++i) out = add_game(out, players, counts);
  out.actual = inflate_game(out.actual, players, counts);
  for (auto& g : out.subjective) g = inflate_game(g, players, counts);
  return out;
}

bool update_changes(const MisinformationGame& mg, std::size_t cell) {
  auto truth = mg.actual.cell(cell);
  for (const auto& g : mg.subjective) {
    auto view = g.cell(cell);
    if (!std::equal(view.begin(), view.end(), truth.begin())) return true;
  }
  return false;
}

MisinformationGame update_cell(const MisinformationGame& mg, std::size_t cell) {
  require_canonical(mg, "update");
  if (cell >= mg.actual.num_cells()) throw Error(ErrorKind::InvalidArgument, "position out of range");
  MisinformationGame out = mg;
  auto truth = mg.actual.cell(cell);
  for (auto& g : out.subjective) g.set_cell(cell, truth);
  return out;
}

MisinformationGame update(const MisinformationGame& mg, const Position& v) {
  require_canonical(mg, "update");
  return update_cell(mg, mg.actual.cell_index(v));
}

MisinformationGame update_set(const MisinformationGame& mg, const PositionSet& xs) {
  require_canonical(mg, "update");
  MisinformationGame out = mg;
  for (auto cell : xs.cells()) {
    if (cell >= mg.actual.num_cells()) throw Error(ErrorKind::InvalidArgument, "position out of range");
    auto truth = mg.actual.cell(cell);
    for (auto& g : out.subjective) g.set_cell(cell, truth);
  }
  return out;
}

bool mg_equal(const MisinformationGame& a, const MisinformationGame& b) {
  if (!a.actual.same_shape(b.actual) || a.subjective.size() != b.subjective.size())
    throw Error(ErrorKind::ShapeMismatch, "comparing misinformation games of different shapes");
  for (std::size_t i = 0; i < a.subjective.size(); ++i)
    if (!a.subjective[i].same_shape(b.subjective[i]))
      throw Error(ErrorKind::ShapeMismatch, "comparing misinformation games of different shapes");
  return a == b;
}

std::vector<StrategyProfile> nme(const MisinformationGame& mg, const SolverOptions& opts) {
  require_canonical(mg, "nme");
  const std::size_t n = mg.num_players();
  std::vector<std::vector<MixedStrategy>> components(n);
  for (std::size_t i = 0; i < n; ++i) {
    EquilibriumSet es = all_nash(mg.subjective[i], opts);
    if (es.degenerate && !opts.allow_degenerate)
      throw Error(ErrorKind::Degenerate, "subjective game of player " + std::to_string(i + 1) +
                                             " has a continuum of equilibria");
    if (es.profiles.empty())
      throw Error(ErrorKind::EmptyEquilibria,
                  "no equilibrium found for the subjective game of player " + std::to_string(i + 1));
    auto& comp = components[i];
    for (const auto& p : es.profiles) {
      const MixedStrategy& s = p[i];
      bool dup = std::any_of(comp.begin(), comp.end(), [&](const MixedStrategy& t) {
        return s.is_exact() && t.is_exact() ? s == t : s.approx_equal(t, opts.dedupe_tol);
      });
      if (!dup) comp.push_back(s);
    }
    std::sort(comp.begin(), comp.end());
  }

  std::vector<StrategyProfile> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<MixedStrategy> s;
    s.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.push_back(components[i][pick[i]]);
    out.emplace_back(std::move(s));
    std::size_t i = n;
    while (true) {
      if (i == 0) return out;
      --i;
      if (++pick[i] < components[i].size()) break;
      pick[i] = 0;
    }
  }
}

std::vector<std::size_t> characteristic_cells(const NormalFormGame& shape, const StrategyProfile& profile,
                                              double eps) {
  std::vector<std::size_t> out;
  for (const auto& p : characteristic_set(profile, eps)) out.push_back(shape.cell_index(p));
  return out;
}

std::vector<std::size_t> characteristic_cells(const NormalFormGame& shape, const std::vector<StrategyProfile>& profiles,
                                              double eps) {
  std::vector<std::size_t> out;
  for (const auto& p : profiles) {
    auto cells = characteristic_cells(shape, p, eps);
    out.insert(out.end(), cells.begin(), cells.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Number price_of_misinformation(const MisinformationGame& mg, const std::vector<StrategyProfile>& nmes) {
  return welfare_ratio(mg.actual, nmes, "price of misinformation");
}

Number price_of_misinformation(const MisinformationGame& mg, const SolverOptions& opts) {
  return price_of_misinformation(mg, nme(mg, opts));
}

std::string stable_hash(const MisinformationGame& mg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ULL;
    h = (h ^ 0xff) * 0x100000001b3ULL;
  };
  auto feed_game = [&](const NormalFormGame& g) {
    feed(g.shape_string());
    for (const auto& r : g.flat_payoffs()) feed(r.str());
  };
  feed_game(mg.actual);
  for (const auto& g : mg.subjective) feed_game(g);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace misinfo
