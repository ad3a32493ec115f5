#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "maxface/balance.hpp"
#include "maxface/forces.hpp"

namespace maxface {

GaugeFixing GaugeFixing::standard(const Configuration& config) {
  GaugeFixing g;
  const auto necks = config.necks();
  g.pinned.push_back({necks.front(), config.position(necks.front())});
  if (necks.size() >= 2) {
    NeckId best = necks[1];
    for (std::size_t i = 1; i < necks.size(); ++i)
      if (std::abs(config.position(necks[i])) > std::abs(config.position(best))) best = necks[i];
    g.pinned.push_back({best, config.position(best)});
  }
  return g;
}

namespace {

double norm2(const std::vector<Complex>& f) {
  double s = 0.0;
  for (Complex z : f) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs(const std::vector<Complex>& f) {
  double m = 0.0;
  for (Complex z : f) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

NewtonResult newton_balance(const Configuration& initial, const GaugeFixing& gauge,
                            const NewtonOptions& options) {
  if (gauge.pinned.size() > 2)
    throw Error(ErrorKind::InvalidConfiguration, "at most two pins");
  auto pos = initial.all_positions();
  std::vector<bool> pinned(initial.total_necks(), false);
  for (auto& [neck, value] : gauge.pinned) {
    if (!initial.contains(neck)) throw Error(ErrorKind::InvalidConfiguration, "pin out of range");
    const int idx = initial.flat_index(neck);
    if (pinned[idx]) throw Error(ErrorKind::InvalidConfiguration, "neck pinned twice");
    pinned[idx] = true;
    pos[neck.level - 1][neck.index - 1] = value;
  }
  Configuration cfg = initial.with_positions(pos);
  const NeckSizes sizes = neck_sizes(cfg);
  const auto necks = cfg.necks();
  std::vector<int> free;
  for (int i = 0; i < cfg.total_necks(); ++i)
    if (!pinned[i]) free.push_back(i);

  auto forces = all_forces(cfg, sizes);
  NewtonResult result{cfg, 0, max_abs(forces)};
  if (result.residual <= options.tol) return result;
  if (free.empty())
    throw Error(ErrorKind::NoConvergence, "no free positions and forces do not vanish",
                result.residual);

  const int N = cfg.total_necks();
  const int U = static_cast<int>(free.size());
  for (int it = 1; it <= options.max_iter; ++it) {
    const ComplexMatrix J = balance_jacobian(cfg, sizes);
    Eigen::MatrixXcd A(N, U);
    Eigen::VectorXcd F(N);
    for (int i = 0; i < N; ++i) {
      F(i) = forces[i];
      for (int u = 0; u < U; ++u) A(i, u) = J(i, free[u]);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < s.size(); ++i)
      if (s(i) > 1e-8 * s(0)) ++rank;
    // Generic balanced systems keep rank N-2; with N-2 free unknowns that is full column rank.
    if (s.size() == 0 || s(0) == 0.0 || rank < std::min(U, std::max(N - 2, 0))) {
      std::ostringstream os;
      os << "reduced Jacobian rank " << rank << " with " << U << " unknowns";
      throw Error(ErrorKind::SingularJacobian, os.str(), result.residual);
    }
    svd.setThreshold(1e-8);
    Eigen::VectorXcd step = -svd.solve(F);

    const double current = norm2(forces);
    bool accepted = false;
    double lambda = 1.0;
    for (int h = 0; h <= options.max_halvings && !accepted; ++h, lambda *= 0.5) {
      auto trial = cfg.all_positions();
      for (int u = 0; u < U; ++u) {
        const NeckId n = necks[free[u]];
        trial[n.level - 1][n.index - 1] += lambda * step(u);
      }
      try {
        Configuration cand = cfg.with_positions(trial);
        auto f = all_forces(cand, sizes);
        if (norm2(f) < current) {
          cfg = std::move(cand);
          forces = std::move(f);
          accepted = true;
        }
      } catch (const Error&) {
        // step made two poles collide; halve again
      }
    }
    result = {cfg, it, max_abs(forces)};
    if (result.residual <= options.tol) return result;
    if (!accepted) {
      std::ostringstream os;
      os << "line search stalled at iteration " << it << ", max|F| = " << result.residual;
      throw Error(ErrorKind::NoConvergence, os.str(), result.residual);
    }
  }
  std::ostringstream os;
  os << "no convergence in " << options.max_iter << " iterations, max|F| = " << result.residual;
  throw Error(ErrorKind::NoConvergence, os.str(), result.residual);
}

}  // namespace maxface
