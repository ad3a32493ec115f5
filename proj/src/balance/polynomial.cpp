#include "maxface/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace maxface {

using C = std::complex<double>;

Polynomial::Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Polynomial Polynomial::from_roots(const std::vector<C>& roots) {
  Polynomial p({1.0});
  for (C r : roots) p = p * Polynomial({-r, 1.0});
  return p;
}

C Polynomial::operator()(C z) const {
  C s = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * z + *it;
  return s;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial({0.0});
  std::vector<C> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = double(i) * coeffs_[i];
  return Polynomial(d);
}

Polynomial Polynomial::abs() const {
  std::vector<C> a;
  for (C c : coeffs_) a.push_back(std::abs(c));
  return Polynomial(a);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<C> s(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) s[i] += o.coeffs_[i];
  return Polynomial(s);
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * C(-1.0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<C> s(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) s[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(s);
}

Polynomial Polynomial::operator*(C s) const {
  std::vector<C> out = coeffs_;
  for (C& c : out) c *= s;
  return Polynomial(out);
}

double Polynomial::max_coefficient() const {
  double m = 0.0;
  for (C c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

std::vector<C> Polynomial::roots() const {
  const int n = degree();
  if (n < 1) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs_[i] / coeffs_[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
  std::vector<C> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  // a couple of Newton sweeps on the original polynomial
  const Polynomial d = derivative();
  for (C& r : out)
    for (int k = 0; k < 3; ++k) {
      C dv = d(r);
      if (dv == 0.0) break;
      r -= (*this)(r) / dv;
    }
  std::sort(out.begin(), out.end(), [](C a, C b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

}  // namespace maxface
