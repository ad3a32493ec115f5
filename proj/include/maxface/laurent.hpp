#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Truncated power series around a simple pole of a sum of simple poles
// f(z) = rho/(z-x) + h(z). Shared by the residue calculus and the
// node gluing.

namespace maxface::laurent {

using Complex = std::complex<double>;
using Series = std::vector<Complex>;

// Taylor coefficients h_0..h_{order-1} at centers[skip] of
// sum_{j != skip} residues[j] / (z - centers[j]).
Series regular_part(const std::vector<Complex>& centers,
                    const std::vector<Complex>& residues, std::size_t skip,
                    int order);

Series multiply(const Series& a, const Series& b, int order);
Series power(const Series& a, int exponent, int order);

double binomial(int n, int k);

// Coefficient of (z-x)^{-1} in (rho/(z-x) + h)^p.
Complex residue_of_power(Complex rho, const Series& h, int p);

// d[q] = coefficient of (z-x)^{-q} in (rho/(z-x) + h)^p for q = 0..p
// (d[0] unused, left 0).
Series principal_part_of_power(Complex rho, const Series& h, int p);

}  // namespace maxface::laurent
