#include "misinfo/profile.hpp"

#include <cmath>
#include <sstream>

#include "misinfo/error.hpp"

namespace misinfo {

MixedStrategy::MixedStrategy(std::vector<Rational> probs) : exact_mode_(true), exact_(std::move(probs)) {
  if (exact_.empty()) throw Error(ErrorKind::InvalidArgument, "mixed strategy over no strategies");
  Rational sum;
  for (const auto& p : exact_) {
    if (p.sign() < 0) throw Error(ErrorKind::InvalidArgument, "negative probability " + p.str());
    sum += p;
  }
  if (sum != Rational(1)) throw Error(ErrorKind::InvalidArgument, "probabilities sum to " + sum.str());
  approx_.reserve(exact_.size());
  for (const auto& p : exact_) approx_.push_back(p.to_double());
}

MixedStrategy::MixedStrategy(std::vector<double> probs) : exact_mode_(false), approx_(std::move(probs)) {
  if (approx_.empty()) throw Error(ErrorKind::InvalidArgument, "mixed strategy over no strategies");
  double sum = 0;
  for (double p : approx_) {
    if (!(p >= 0)) throw Error(ErrorKind::InvalidArgument, "negative or NaN probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNumericSumTolerance)
    throw Error(ErrorKind::InvalidArgument, "probabilities do not sum to 1");
}

MixedStrategy MixedStrategy::pure(std::size_t num_strategies, std::size_t chosen) {
  if (chosen >= num_strategies) throw Error(ErrorKind::InvalidArgument, "pure strategy index out of range");
  std::vector<Rational> p(num_strategies);
  p[chosen] = 1;
  return MixedStrategy(std::move(p));
}

const std::vector<Rational>& MixedStrategy::exact() const {
  if (!exact_mode_) throw Error(ErrorKind::InvalidArgument, "numeric strategy has no exact form");
  return exact_;
}

Number MixedStrategy::probability(std::size_t j) const {
  if (exact_mode_) return exact_.at(j);
  return approx_.at(j);
}

std::vector<std::size_t> MixedStrategy::support(double eps) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < approx_.size(); ++j) {
    bool in = exact_mode_ ? exact_[j].sign() > 0 : approx_[j] > eps;
    if (in) out.push_back(j);
  }
  return out;
}

int MixedStrategy::compare(const MixedStrategy& o) const {
  std::size_t n = std::min(size(), o.size());
  bool both_exact = exact_mode_ && o.exact_mode_;
  for (std::size_t j = 0; j < n; ++j) {
    if (both_exact) {
      if (exact_[j] != o.exact_[j]) return exact_[j] < o.exact_[j] ? -1 : 1;
    } else if (approx_[j] != o.approx_[j]) {
      return approx_[j] < o.approx_[j] ? -1 : 1;
    }
  }
  if (size() != o.size()) return size() < o.size() ? -1 : 1;
  return 0;
}

bool MixedStrategy::approx_equal(const MixedStrategy& o, double tol) const {
  if (size() != o.size()) return false;
  if (exact_mode_ && o.exact_mode_) return exact_ == o.exact_;
  for (std::size_t j = 0; j < size(); ++j)
    if (std::abs(approx_[j] - o.approx_[j]) >= tol) return false;
  return true;
}

std::string MixedStrategy::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < size(); ++j) {
    if (j) os << ',';
    os << probability(j);
  }
  os << ')';
  return os.str();
}

StrategyProfile StrategyProfile::exact(const std::vector<std::vector<Rational>>& probs) {
  std::vector<MixedStrategy> s;
  s.reserve(probs.size());
  for (const auto& p : probs) s.emplace_back(p);
  return StrategyProfile(std::move(s));
}

StrategyProfile StrategyProfile::numeric(const std::vector<std::vector<double>>& probs) {
  std::vector<MixedStrategy> s;
  s.reserve(probs.size());
  for (const auto& p : probs) s.emplace_back(p);
  return StrategyProfile(std::move(s));
}

StrategyProfile StrategyProfile::pure(const std::vector<std::size_t>& counts, const Position& p) {
  if (counts.size() != p.size()) throw Error(ErrorKind::ShapeMismatch, "position length mismatch");
  std::vector<MixedStrategy> s;
  s.reserve(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) s.push_back(MixedStrategy::pure(counts[i], p[i]));
  return StrategyProfile(std::move(s));
}

bool StrategyProfile::is_exact() const {
  for (const auto& s : s_)
    if (!s.is_exact()) return false;
  return true;
}

bool StrategyProfile::fits(const NormalFormGame& game) const {
  if (s_.size() != game.num_players()) return false;
  for (std::size_t i = 0; i < s_.size(); ++i)
    if (s_[i].size() != game.strategy_count(i)) return false;
  return true;
}

bool StrategyProfile::is_pure() const {
  for (const auto& s : s_)
    if (s.support().size() != 1) return false;
  return true;
}

Position StrategyProfile::as_position() const {
  Position p;
  for (const auto& s : s_) {
    auto sup = s.support();
    if (sup.size() != 1) throw Error(ErrorKind::InvalidArgument, "profile is not pure");
    p.indices.push_back(sup.front());
  }
  return p;
}

int StrategyProfile::compare(const StrategyProfile& o) const {
  std::size_t n = std::min(s_.size(), o.s_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = s_[i].compare(o.s_[i]); c != 0) return c;
  if (s_.size() != o.s_.size()) return s_.size() < o.s_.size() ? -1 : 1;
  return 0;
}

bool StrategyProfile::approx_equal(const StrategyProfile& o, double tol) const {
  if (s_.size() != o.s_.size()) return false;
  for (std::size_t i = 0; i < s_.size(); ++i)
    if (!s_[i].approx_equal(o.s_[i], tol)) return false;
  return true;
}

std::string StrategyProfile::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (i) out += ',';
    out += s_[i].str();
  }
  return out + ")";
}

std::vector<std::size_t> support(const MixedStrategy& s, double eps) { return s.support(eps); }

std::vector<Position> characteristic_set(const StrategyProfile& profile, double eps) {
  std::vector<std::vector<std::size_t>> sup;
  for (const auto& s : profile.strategies()) sup.push_back(s.support(eps));
  std::vector<Position> out;
  for (const auto& s : sup)
    if (s.empty()) return out;
  std::vector<std::size_t> pick(sup.size(), 0);
  while (true) {
    Position p;
    p.indices.reserve(sup.size());
    for (std::size_t i = 0; i < sup.size(); ++i) p.indices.push_back(sup[i][pick[i]]);
    out.push_back(std::move(p));
    std::size_t i = sup.size();
    while (i > 0) {
      --i;
      if (++pick[i] < sup[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (sup.empty()) return out;
  }
}

}  // namespace misinfo
