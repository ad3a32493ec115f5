#pragma once

#include <complex>
#include <map>
#include <vector>

namespace maxface {

// theta -> Im( sum_m A_m e^{i m theta} ), m >= 1.
class TrigPolynomial {
 public:
  TrigPolynomial() = default;
  explicit TrigPolynomial(std::map<int, std::complex<double>> terms);

  const std::map<int, std::complex<double>>& terms() const { return terms_; }
  std::complex<double> amplitude(int frequency) const;

  double operator()(double theta) const;
  double derivative(double theta, int order = 1) const;

  double max_amplitude() const;
  bool is_zero(double tol = 0.0) const;

  // Zeros in [0, 2pi), ascending. Grid sign change then bisection to `tol`.
  std::vector<double> zeros(int cells = 0, double tol = 1e-13) const;

 private:
  std::map<int, std::complex<double>> terms_;
};

}  // namespace maxface
