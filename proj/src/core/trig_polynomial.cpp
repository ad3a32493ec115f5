#include "maxface/trig_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace maxface {

TrigPolynomial::TrigPolynomial(std::map<int, std::complex<double>> terms) {
  for (auto& [m, a] : terms)
    if (m >= 1 && a != 0.0) terms_[m] = a;
}

std::complex<double> TrigPolynomial::amplitude(int frequency) const {
  auto it = terms_.find(frequency);
  return it == terms_.end() ? 0.0 : it->second;
}

double TrigPolynomial::operator()(double theta) const { return derivative(theta, 0); }

double TrigPolynomial::derivative(double theta, int order) const {
  double s = 0.0;
  for (auto& [m, a] : terms_) {
    const std::complex<double> factor = std::pow(std::complex<double>(0.0, m), order);
    s += std::imag(a * factor * std::polar(1.0, m * theta));
  }
  return s;
}

double TrigPolynomial::max_amplitude() const {
  double m = 0.0;
  for (auto& [f, a] : terms_) m = std::max(m, std::abs(a));
  return m;
}

bool TrigPolynomial::is_zero(double tol) const { return max_amplitude() <= tol; }

std::vector<double> TrigPolynomial::zeros(int cells, double tol) const {
  std::vector<double> out;
  if (terms_.empty()) return out;
  const double two_pi = 2.0 * std::numbers::pi;
  if (cells <= 0) cells = std::max(256, 32 * terms_.rbegin()->first);
  const double h = two_pi / cells;
  auto f = [this](double x) { return (*this)(x); };
  for (int i = 0; i < cells; ++i) {
    double lo = i * h, hi = (i + 1) * h;
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) {
      out.push_back(lo);
      continue;
    }
    if (flo * fhi >= 0.0) continue;
    while (hi - lo > tol) {
      double mid = 0.5 * (lo + hi);
      double fm = f(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    double z = 0.5 * (lo + hi);
    if (z >= two_pi) z -= two_pi;
    out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  // a zero sitting on 0 can show up again just below 2pi
  if (out.size() > 1 && out.front() + two_pi - out.back() < 10 * tol) out.pop_back();
  return out;
}

}  // namespace maxface
