#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "maxface/balance.hpp"
#include "maxface/forces.hpp"

namespace maxface {

ComplexMatrix balance_jacobian(const Configuration& config, const NeckSizes& sizes) {
  const int N = config.total_necks();
  ComplexMatrix J(N, N);
  for (NeckId n : config.necks()) {
    const int row = config.flat_index(n);
    const Complex pk = config.position(n);
    const double cl = sizes.at(n.level);
    // each term w/(p_k - q): d/dp_k = -w/(p_k-q)^2, d/dq = +w/(p_k-q)^2
    auto add = [&](NeckId other, double w) {
      const Complex d = pk - config.position(other);
      const Complex e = w / (d * d);
      J(row, row) -= e;
      J(row, config.flat_index(other)) += e;
    };
    for (int i = 1; i <= config.necks_at(n.level); ++i)
      if (i != n.index) add({n.level, i}, 2.0 * cl * cl);
    for (int i = 1; i <= config.necks_at(n.level + 1); ++i)
      add({n.level + 1, i}, -cl * sizes.at(n.level + 1));
    for (int i = 1; i <= config.necks_at(n.level - 1); ++i)
      add({n.level - 1, i}, -cl * sizes.at(n.level - 1));
  }
  return J;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return {};
  Eigen::MatrixXcd A(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) A(i, j) = m(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

RigidityReport rigidity(const Configuration& config, const NeckSizes& sizes) {
  RigidityReport rep;
  rep.max_force = max_force(config, sizes);
  rep.balanced = rep.max_force <= 1e-8;
  rep.singular_values = singular_values(balance_jacobian(config, sizes));
  const double smax = rep.singular_values.empty() ? 0.0 : rep.singular_values.front();
  for (double s : rep.singular_values)
    if (smax > 0.0 && s > 1e-8 * smax) ++rep.jacobian_rank;
  rep.expected_rank = std::max(config.total_necks() - 2, 0);
  rep.is_rigid = rep.jacobian_rank == rep.expected_rank;
  return rep;
}

std::vector<double> dW_dQ_gradient(const Configuration& config) {
  const int L = config.plane_count();
  const NeckSizes sizes = neck_sizes(config);
  auto n = [&](int l) { return double(config.necks_at(l)); };
  // dW/dc_l for the closed form
  std::vector<double> dWdc(L + 1, 0.0);
  for (int l = 1; l < L; ++l)
    dWdc[l] = 2 * n(l) * (n(l) - 1) * sizes.at(l) - n(l) * n(l + 1) * sizes.at(l + 1) -
              n(l - 1) * n(l) * sizes.at(l - 1);
  std::vector<double> grad(L - 1, 0.0);
  for (int j = 1; j < L; ++j) {
    // dc_l/dQ_j from c_l = (n_{l-1} c_{l-1} - Q_l)/n_l; Q_L only enters through the sum rule
    double prev = 0.0;
    for (int l = 1; l < L; ++l) {
      double dc = (n(l - 1) * prev - (l == j ? 1.0 : 0.0)) / n(l);
      grad[j - 1] += dWdc[l] * dc;
      prev = dc;
    }
  }
  return grad;
}

int dW_dQ_rank(const Configuration& config) {
  double norm = 0.0;
  for (double g : dW_dQ_gradient(config)) norm = std::max(norm, std::abs(g));
  return norm > 1e-10 ? 1 : 0;
}

}  // namespace maxface
