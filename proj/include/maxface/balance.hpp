#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maxface/configuration.hpp"

namespace maxface {

// Dense row-major complex matrix; keeps Eigen out of the public headers.
struct ComplexMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> data;

  ComplexMatrix() = default;
  ComplexMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c, 0.0) {}
  Complex& operator()(int i, int j) { return data[std::size_t(i) * cols + j]; }
  Complex operator()(int i, int j) const { return data[std::size_t(i) * cols + j]; }
};

// d F_{l,k} / d p_{l',k'}, rows and columns in Configuration::necks() order.
ComplexMatrix balance_jacobian(const Configuration& config, const NeckSizes& sizes);

// Singular values, descending.
std::vector<double> singular_values(const ComplexMatrix& m);

struct GaugeFixing {
  std::vector<std::pair<NeckId, Complex>> pinned;

  // First neck of the lowest level plus the remaining neck of largest modulus.
  static GaugeFixing standard(const Configuration& config);
};

struct NewtonOptions {
  int max_iter = 50;
  double tol = 1e-12;
  int max_halvings = 20;
};

struct NewtonResult {
  Configuration config;
  int iterations = 0;
  double residual = 0.0;  // max |F| at the returned configuration
};

// Damped Gauss-Newton on all N forces in the N - (#pins) free positions.
// Throws NoConvergence or SingularJacobian.
NewtonResult newton_balance(const Configuration& initial, const GaugeFixing& gauge,
                            const NewtonOptions& options = {});

struct RigidityReport {
  int jacobian_rank = 0;
  int expected_rank = 0;
  std::vector<double> singular_values;
  bool is_rigid = false;
  bool balanced = true;  // false -> max|F| > 1e-8, report is only advisory
  double max_force = 0.0;
};

RigidityReport rigidity(const Configuration& config, const NeckSizes& sizes);

// Gradient of closed-form W with respect to (Q_1..Q_{L-1}), Q_L = -sum.
std::vector<double> dW_dQ_gradient(const Configuration& config);
int dW_dQ_rank(const Configuration& config);

enum class EndType { Catenoid, Planar };

struct TopologyReport {
  int genus = 0;
  int end_count = 0;
  bool embeddable = false;
  std::vector<EndType> end_types;
};

TopologyReport topology(const Configuration& config, const NeckSizes& sizes);

const char* to_string(EndType type);

}  // namespace maxface
