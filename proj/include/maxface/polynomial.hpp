#pragma once

#include <complex>
#include <vector>

namespace maxface {

// Dense complex polynomial, ascending coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::complex<double>> coeffs);

  static Polynomial from_roots(const std::vector<std::complex<double>>& roots);
  static Polynomial constant(std::complex<double> c) { return Polynomial({c}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

  std::complex<double> operator()(std::complex<double> z) const;
  Polynomial derivative() const;
  Polynomial abs() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(std::complex<double> s) const;

  double max_coefficient() const;

  // Eigenvalues of the companion matrix.
  std::vector<std::complex<double>> roots() const;

 private:
  std::vector<std::complex<double>> coeffs_;
};

}  // namespace maxface
