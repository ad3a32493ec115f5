#pragma once

#include <array>
#include <complex>
#include <functional>

namespace maxface {

// Integrands dh/g, g dh, dh carried together along a path.
struct Triple {
  std::complex<double> inv_g_dh, g_dh, dh;

  Triple& operator+=(const Triple& o);
  Triple operator+(const Triple& o) const;
  Triple operator-(const Triple& o) const;
  Triple operator*(std::complex<double> s) const;
  double norm() const;  // max modulus of the components

  // X = Re( 1/2 (1/g + g), i/2 (1/g - g), 1 ) dh
  std::array<double, 3> position() const;
  // conj(int dh/g) + int g dh
  std::complex<double> horizontal() const;
};

struct QuadratureOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_depth = 40;
};

// Adaptive Gauss-Kronrod 7/15 on [a, b].
Triple integrate(const std::function<Triple(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});

// Composite trapezoid on a periodic integrand over [0, 1).
Triple integrate_periodic(const std::function<Triple(double)>& f, int points);

}  // namespace maxface
