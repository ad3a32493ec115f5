#pragma once

#include <random>

#include "maxface/configuration.hpp"

namespace testsupport {

// Random configuration with at most max_necks necks and Q summing to zero.
inline maxface::Configuration random_config(std::mt19937& rng, int max_necks = 8) {
  using maxface::Complex;
  std::uniform_int_distribution<int> Ld(2, 4);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    int L = Ld(rng);
    std::vector<std::vector<Complex>> p(L - 1);
    int total = 0;
    for (auto& lev : p) {
      int n = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int k = 0; k < n; ++k) lev.push_back({u(rng), u(rng)});
      total += n;
    }
    if (total > max_necks) continue;
    std::vector<double> Q(L);
    double s = 0;
    for (int l = 0; l < L - 1; ++l) s += (Q[l] = u(rng));
    Q[L - 1] = -s;
    try {
      return maxface::Configuration(p, Q);
    } catch (const maxface::Error&) {
    }
  }
}

}  // namespace testsupport
