#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "misinfo/error.hpp"
#include "misinfo/nash.hpp"
#include "misinfo/rng.hpp"

namespace misinfo {

namespace {

// Indifference system for one joint support. Unknowns are each player's
// probabilities on its support followed by one value per player; equations are
// "payoff of j equals value" for every supported j plus one sum-to-one row per
// player.
class SupportSystem {
 public:
  SupportSystem(const NormalFormGame& game, const std::vector<double>& pay,
                std::vector<std::vector<std::size_t>> support)
      : game_(game), pay_(pay), sup_(std::move(support)), n_(sup_.size()) {
    offset_.resize(n_ + 1, 0);
    for (std::size_t i = 0; i < n_; ++i) offset_[i + 1] = offset_[i] + sup_[i].size();
    dim_ = offset_[n_] + n_;
  }

  std::size_t dim() const { return dim_; }
  std::size_t var(std::size_t player, std::size_t t) const { return offset_[player] + t; }
  std::size_t value_var(std::size_t player) const { return offset_[n_] + player; }
  const std::vector<std::vector<std::size_t>>& support() const { return sup_; }

  void evaluate(const Eigen::VectorXd& z, Eigen::VectorXd& f, Eigen::MatrixXd& jac) const {
    f.setZero(static_cast<Eigen::Index>(dim_));
    jac.setZero(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    std::vector<std::size_t> pick(n_, 0);
    std::vector<double> prob(n_);
    std::vector<std::size_t> col(n_);
    while (true) {
      std::size_t cell = 0;
      for (std::size_t k = 0; k < n_; ++k) {
        cell += sup_[k][pick[k]] * game_.stride(k);
        col[k] = var(k, pick[k]);
        prob[k] = z[static_cast<Eigen::Index>(col[k])];
      }
      for (std::size_t i = 0; i < n_; ++i) {
        const double p = pay_[cell * n_ + i];
        const auto row = static_cast<Eigen::Index>(col[i]);  // equation (i, s_i) shares the variable's index
        double others = p;
        for (std::size_t k = 0; k < n_; ++k)
          if (k != i) others *= prob[k];
        f[row] += others;
        for (std::size_t k = 0; k < n_; ++k) {
          if (k == i) continue;
          double d = p;
          for (std::size_t m = 0; m < n_; ++m)
            if (m != i && m != k) d *= prob[m];
          jac(row, static_cast<Eigen::Index>(col[k])) += d;
        }
      }
      std::size_t k = n_;
      bool done = true;
      while (k-- > 0) {
        if (++pick[k] < sup_[k].size()) {
          done = false;
          break;
        }
        pick[k] = 0;
      }
      if (done) break;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      const auto v = static_cast<Eigen::Index>(value_var(i));
      for (std::size_t t = 0; t < sup_[i].size(); ++t) {
        const auto row = static_cast<Eigen::Index>(var(i, t));
        f[row] -= z[v];
        jac(row, v) = -1;
      }
      // The sum row reuses the value variable's index.
      double sum = -1;
      for (std::size_t t = 0; t < sup_[i].size(); ++t) {
        sum += z[static_cast<Eigen::Index>(var(i, t))];
        jac(v, static_cast<Eigen::Index>(var(i, t))) = 1;
      }
      f[v] = sum;
    }
  }

 private:
  const NormalFormGame& game_;
  const std::vector<double>& pay_;
  std::vector<std::vector<std::size_t>> sup_;
  std::size_t n_;
  std::vector<std::size_t> offset_;
  std::size_t dim_ = 0;
};

struct NewtonResult {
  Eigen::VectorXd z;
  double residual;
  bool singular;
};

NewtonResult damped_newton(const SupportSystem& sys, Eigen::VectorXd z, int iterations) {
  Eigen::VectorXd f, f_try;
  Eigen::MatrixXd jac, jac_try;
  sys.evaluate(z, f, jac);
  double norm = f.squaredNorm();
  double mu = 1e-3;
  const auto dim = static_cast<Eigen::Index>(sys.dim());
  for (int it = 0; it < iterations && f.lpNorm<Eigen::Infinity>() > 1e-14; ++it) {
    Eigen::MatrixXd normal = jac.transpose() * jac;
    normal.diagonal().array() += mu;
    Eigen::VectorXd step = normal.ldlt().solve(-jac.transpose() * f);
    Eigen::VectorXd cand = z + step;
    sys.evaluate(cand, f_try, jac_try);
    double cand_norm = f_try.squaredNorm();
    if (std::isfinite(cand_norm) && cand_norm < norm) {
      z = std::move(cand);
      f = f_try;
      jac = jac_try;
      norm = cand_norm;
      mu = std::max(mu / 4, 1e-15);
    } else {
      mu *= 8;
      if (mu > 1e12) break;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const auto& sv = svd.singularValues();
  bool singular = dim > 0 && sv[dim - 1] < 1e-8 * std::max(1.0, sv[0]);
  return {std::move(z), f.lpNorm<Eigen::Infinity>(), singular};
}

double payoff_under(const NormalFormGame& game, const std::vector<double>& pay,
                    const std::vector<std::vector<double>>& x, std::size_t player, long pinned) {
  double total = 0;
  const std::size_t n = game.num_players();
  for (std::size_t c = 0; c < game.num_cells(); ++c) {
    Position p = game.position(c);
    if (pinned >= 0 && p[player] != static_cast<std::size_t>(pinned)) continue;
    double w = pay[c * n + player];
    for (std::size_t k = 0; k < n && w != 0; ++k)
      if (!(pinned >= 0 && k == player)) w *= x[k][p[k]];
    total += w;
  }
  return total;
}

}  // namespace

EquilibriumSet nash_numeric(const NormalFormGame& game, const SolverOptions& opts) {
  const std::size_t n = game.num_players();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "game has no players");
  double joint = 1;
  for (auto c : game.strategy_counts()) {
    if (c > 30) throw Error(ErrorKind::CapExceeded, "too many strategies for numeric support enumeration");
    joint *= std::ldexp(1.0, static_cast<int>(c)) - 1;
  }
  if (joint > static_cast<double>(opts.support_cap))
    throw Error(ErrorKind::CapExceeded, "numeric support enumeration would try " + std::to_string(joint) +
                                            " joint supports (cap " + std::to_string(opts.support_cap) + ")");

  std::vector<double> pay;
  pay.reserve(game.flat_payoffs().size());
  for (const auto& r : game.flat_payoffs()) pay.push_back(r.to_double());

  EquilibriumSet out;
  out.mode = EquilibriumSet::Mode::Numeric;
  auto add = [&](StrategyProfile p) {
    for (const auto& q : out.profiles)
      if (q.approx_equal(p, opts.dedupe_tol)) return;
    out.profiles.push_back(std::move(p));
  };

  std::vector<unsigned> mask(n, 1);
  std::uint64_t support_index = 0;
  while (true) {
    std::vector<std::vector<std::size_t>> sup(n);
    bool all_pure = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < game.strategy_count(i); ++k)
        if (mask[i] & (1u << k)) sup[i].push_back(k);
      all_pure = all_pure && sup[i].size() == 1;
    }

    if (all_pure) {
      Position p;
      for (const auto& s : sup) p.indices.push_back(s.front());
      StrategyProfile prof = StrategyProfile::pure(game.strategy_counts(), p);
      if (is_nash(game, prof)) add(std::move(prof));
    } else {
      SupportSystem sys(game, pay, sup);
      Rng rng(derive_seed(opts.seed, support_index));
      bool converged = false;
      for (int start = 0; start < opts.newton_starts; ++start) {
        Eigen::VectorXd z(static_cast<Eigen::Index>(sys.dim()));
        for (std::size_t i = 0; i < n; ++i) {
          double total = 0;
          for (std::size_t t = 0; t < sup[i].size(); ++t) {
            double w = start == 0 ? 1.0 : -std::log(1.0 - uniform01(rng));
            z[static_cast<Eigen::Index>(sys.var(i, t))] = w;
            total += w;
          }
          for (std::size_t t = 0; t < sup[i].size(); ++t) z[static_cast<Eigen::Index>(sys.var(i, t))] /= total;
          z[static_cast<Eigen::Index>(sys.value_var(i))] = 0;
        }
        NewtonResult res = damped_newton(sys, z, opts.newton_iterations);
        if (!(res.residual < opts.tol)) continue;
        converged = true;

        std::vector<std::vector<double>> x(n);
        bool feasible = true;
        for (std::size_t i = 0; i < n && feasible; ++i) {
          x[i].assign(game.strategy_count(i), 0.0);
          double total = 0;
          for (std::size_t t = 0; t < sup[i].size(); ++t) {
            double v = res.z[static_cast<Eigen::Index>(sys.var(i, t))];
            if (v < -opts.tol) feasible = false;
            x[i][sup[i][t]] = std::max(v, 0.0);
            total += x[i][sup[i][t]];
          }
          if (total <= 0) feasible = false;
          for (double& v : x[i]) v /= total;
        }
        if (!feasible) continue;
        bool stable = true;
        for (std::size_t i = 0; i < n && stable; ++i) {
          double own = payoff_under(game, pay, x, i, -1);
          for (std::size_t s = 0; s < game.strategy_count(i) && stable; ++s)
            if (payoff_under(game, pay, x, i, static_cast<long>(s)) - own >= opts.tol) stable = false;
        }
        if (!stable) continue;
        if (res.singular) out.degenerate = true;
        add(StrategyProfile::numeric(x));
      }
      if (!converged) ++out.unconverged_supports;
    }

    ++support_index;
    std::size_t i = n;
    bool done = true;
    while (i-- > 0) {
      if (++mask[i] < (1u << game.strategy_count(i))) {
        done = false;
        break;
      }
      mask[i] = 1;
    }
    if (done) break;
  }
  std::sort(out.profiles.begin(), out.profiles.end());
  return out;
}

}  // namespace misinfo
