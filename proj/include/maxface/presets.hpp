#pragma once

#include <vector>

#include "maxface/balance.hpp"

namespace maxface {

Configuration preset_catenoid();
// Costa-Hoffman-Meeks data; m = 2 is Costa.
Configuration preset_chm(int m);

struct DihedralOptions {
  int L = 4;
  int m = 5;
  // c_2..c_{L-1}; empty -> c_l = 0.8^{l-2}. c_1 is fixed by W = 0.
  std::vector<double> c_tail;
  // rho_3..rho_{L-1} starting values; empty -> (-1)^l (1 + (l-2)/2).
  std::vector<double> rho_seed;
  int max_iter = 50;
  double tol = 1e-12;
};

// p_{1,1} = 0, p_{l,k} = rho_l e^{2 pi i k/m} (rho_2 = 1). Throws NoConvergence.
Configuration preset_dihedral(const DihedralOptions& options);

// Configuration assembled from per-level roots and neck sizes; throws
// Unbalanced unless polynomial_check certifies it.
Configuration preset_polynomial(const std::vector<std::vector<Complex>>& roots,
                                const NeckSizes& sizes);

// Max coefficient of
//   sum c_l^2 P P_l''/P_l - sum c_l c_{l+1} P P_l' P_{l+1}'/(P_l P_{l+1}).
// Throws RepeatedRoot.
double polynomial_check(const std::vector<std::vector<Complex>>& roots,
                        const NeckSizes& sizes);
// Same sum on absolute values: the size of what should cancel.
double polynomial_check_scale(const std::vector<std::vector<Complex>>& roots,
                              const NeckSizes& sizes);

}  // namespace maxface
