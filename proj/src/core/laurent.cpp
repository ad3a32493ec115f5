#include "maxface/laurent.hpp"

#include <cmath>

namespace maxface::laurent {

Series regular_part(const std::vector<Complex>& centers,
                    const std::vector<Complex>& residues, std::size_t skip,
                    int order) {
  Series h(order, 0.0);
  const Complex x = centers[skip];
  for (std::size_t j = 0; j < centers.size(); ++j) {
    if (j == skip) continue;
    // res/(z - x_j) = -res/d * 1/(1 - u/d), d = x_j - x, u = z - x
    const Complex inv = 1.0 / (centers[j] - x);
    Complex term = -residues[j] * inv;
    for (int s = 0; s < order; ++s) {
      h[s] += term;
      term *= inv;
    }
  }
  return h;
}

Series multiply(const Series& a, const Series& b, int order) {
  Series out(order, 0.0);
  for (int i = 0; i < order && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; i + j < order && j < static_cast<int>(b.size()); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series power(const Series& a, int exponent, int order) {
  Series out(order, 0.0);
  if (order > 0) out[0] = 1.0;
  for (int e = 0; e < exponent; ++e) out = multiply(out, a, order);
  return out;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return std::round(b);
}

Complex residue_of_power(Complex rho, const Series& h, int p) {
  Series hp(p, 0.0);
  if (p > 0) hp[0] = 1.0;
  // hp runs over h^{p-j} for j = p, p-1, ..., 1
  Complex total = 0.0;
  for (int j = p; j >= 1; --j) {
    total += binomial(p, j) * std::pow(rho, j) * hp[j - 1];
    hp = multiply(hp, h, p);
  }
  return total;
}

Series principal_part_of_power(Complex rho, const Series& h, int p) {
  Series d(p + 1, 0.0);
  Series hp(p, 0.0);
  if (p > 0) hp[0] = 1.0;
  for (int j = p; j >= 1; --j) {
    const Complex w = binomial(p, j) * std::pow(rho, j);
    for (int q = 1; q <= j; ++q) d[q] += w * hp[j - q];
    hp = multiply(hp, h, p);
  }
  return d;
}

}  // namespace maxface::laurent
