#include "maxface/presets.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>

#include "maxface/forces.hpp"
#include "maxface/polynomial.hpp"

namespace maxface {

using std::numbers::pi;

Configuration preset_catenoid() { return Configuration({{0.0}}, {-1.0, 1.0}); }

Configuration preset_chm(int m) {
  if (m < 2) throw Error(ErrorKind::InvalidConfiguration, "chm needs m >= 2");
  std::vector<Complex> outer;
  for (int k = 1; k <= m; ++k) outer.push_back(std::polar(1.0, 2 * pi * k / m));
  // exact values on the axes
  for (Complex& z : outer) {
    if (std::abs(z.real()) < 1e-15) z.real(0.0);
    if (std::abs(z.imag()) < 1e-15) z.imag(0.0);
  }
  return Configuration({{0.0}, outer}, {1.0 - m, -1.0, double(m)});
}

namespace {

std::vector<double> growths_from_sizes(const std::vector<int>& n, const std::vector<double>& c) {
  const int L = static_cast<int>(n.size()) + 1;
  auto nn = [&](int l) { return (l >= 1 && l < L) ? double(n[l - 1]) : 0.0; };
  auto cc = [&](int l) { return (l >= 1 && l < L) ? c[l - 1] : 0.0; };
  std::vector<double> Q;
  for (int l = 1; l <= L; ++l) Q.push_back(nn(l - 1) * cc(l - 1) - nn(l) * cc(l));
  return Q;
}

Configuration dihedral_config(int m, const std::vector<double>& rho, const std::vector<double>& Q) {
  std::vector<std::vector<Complex>> p{{0.0}};
  for (double r : rho) {
    std::vector<Complex> lev;
    for (int k = 1; k <= m; ++k) lev.push_back(r * std::polar(1.0, 2 * pi * k / m));
    p.push_back(lev);
  }
  return Configuration(p, Q);
}

}  // namespace

Configuration preset_dihedral(const DihedralOptions& o) {
  const int L = o.L, m = o.m;
  if (L < 3 || m < 2) throw Error(ErrorKind::InvalidConfiguration, "dihedral needs L >= 3, m >= 2");
  std::vector<double> c(L - 1, 0.0);
  if (o.c_tail.empty()) {
    for (int l = 2; l < L; ++l) c[l - 1] = std::pow(0.8, l - 2);
  } else {
    if (static_cast<int>(o.c_tail.size()) != L - 2)
      throw Error(ErrorKind::InvalidConfiguration, "c seed needs L-2 entries");
    for (int l = 2; l < L; ++l) c[l - 1] = o.c_tail[l - 2];
  }
  if (c[1] == 0.0) throw Error(ErrorKind::InvalidConfiguration, "c_2 must be nonzero");
  // W = -m c_1 c_2 + sum_{l>=2} [m(m-1) c_l^2 - m^2 c_l c_{l+1}] = 0
  double rest = 0.0;
  for (int l = 2; l < L; ++l) {
    const double next = (l + 1 < L) ? c[l] : 0.0;
    rest += m * (m - 1.0) * c[l - 1] * c[l - 1] - double(m) * m * c[l - 1] * next;
  }
  c[0] = rest / (m * c[1]);
  std::vector<int> n(L - 1, m);
  n[0] = 1;
  const auto Q = growths_from_sizes(n, c);

  std::vector<double> rho(L - 2, 1.0);
  for (int l = 3; l < L; ++l) {
    if (!o.rho_seed.empty()) {
      if (static_cast<int>(o.rho_seed.size()) != L - 3)
        throw Error(ErrorKind::InvalidConfiguration, "rho seed needs L-3 entries");
      rho[l - 2] = o.rho_seed[l - 3];
    } else {
      rho[l - 2] = ((l % 2 == 0) ? 1.0 : -1.0) * (1.0 + 0.5 * (l - 2));
    }
  }

  // Radial balance: Re F_{l,m} (neck on the positive real axis) for l = 2..L-1.
  Configuration cfg = dihedral_config(m, rho, Q);
  const NeckSizes sizes = neck_sizes(cfg);
  const int U = L - 3;
  auto residual = [&](const Configuration& cf) {
    Eigen::VectorXd r(L - 2);
    for (int l = 2; l < L; ++l) r(l - 2) = force(cf, sizes, {l, m}).real();
    return r;
  };
  Eigen::VectorXd r = residual(cfg);
  for (int it = 0; it < o.max_iter && U > 0; ++it) {
    if (max_force(cfg, sizes) <= o.tol) break;
    const ComplexMatrix J = balance_jacobian(cfg, sizes);
    Eigen::MatrixXd A(L - 2, U);
    for (int l = 2; l < L; ++l)
      for (int j = 3; j < L; ++j) {
        Complex d = 0.0;
        for (int k = 1; k <= m; ++k)
          d += J(cfg.flat_index({l, m}), cfg.flat_index({j, k})) * std::polar(1.0, 2 * pi * k / m);
        A(l - 2, j - 3) = d.real();
      }
    Eigen::VectorXd step = -A.colPivHouseholderQr().solve(r);
    double lambda = 1.0;
    bool ok = false;
    for (int h = 0; h <= 20 && !ok; ++h, lambda *= 0.5) {
      auto trial = rho;
      for (int j = 0; j < U; ++j) trial[j + 1] += lambda * step(j);
      try {
        Configuration cand = dihedral_config(m, trial, Q);
        Eigen::VectorXd rr = residual(cand);
        if (rr.norm() < r.norm()) {
          rho = trial;
          cfg = cand;
          r = rr;
          ok = true;
        }
      } catch (const Error&) {
      }
    }
    if (!ok) break;
  }
  const double res = max_force(cfg, sizes);
  if (!(res <= std::max(o.tol, 1e-12))) {
    std::ostringstream os;
    os << "dihedral radial balance failed, max|F| = " << res;
    throw Error(ErrorKind::NoConvergence, os.str(), res);
  }
  return cfg;
}

namespace {

void check_simple(const std::vector<std::vector<Complex>>& roots) {
  std::vector<Complex> all;
  for (const auto& lev : roots) all.insert(all.end(), lev.begin(), lev.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(all[i] - all[j]) <= 1e-12 * std::max(1.0, std::abs(all[i])))
        throw Error(ErrorKind::RepeatedRoot, "combined polynomial has a repeated root");
}

// Returns the left-hand side, optionally with all coefficients replaced by magnitudes.
Polynomial polynomial_lhs(const std::vector<std::vector<Complex>>& roots, const NeckSizes& sizes,
                          bool magnitudes) {
  check_simple(roots);
  const int levels = static_cast<int>(roots.size());
  std::vector<Polynomial> P;
  for (const auto& lev : roots) {
    Polynomial p = Polynomial::from_roots(lev);
    P.push_back(magnitudes ? p.abs() : p);
  }
  auto product_except = [&](int a, int b) {
    Polynomial out({1.0});
    for (int j = 0; j < levels; ++j)
      if (j != a && j != b) out = out * P[j];
    return out;
  };
  Polynomial lhs({0.0});
  for (int l = 1; l <= levels; ++l) {
    const double cl = sizes.at(l);
    const Polynomial& Pl = P[l - 1];
    lhs = lhs + Pl.derivative().derivative() * product_except(l - 1, -1) * Complex(cl * cl);
    if (l < levels) {
      double w = -cl * sizes.at(l + 1);
      if (magnitudes) w = std::abs(w);
      lhs = lhs + Pl.derivative() * P[l].derivative() * product_except(l - 1, l) * Complex(w);
    }
  }
  return lhs;
}

}  // namespace

double polynomial_check(const std::vector<std::vector<Complex>>& roots, const NeckSizes& sizes) {
  return polynomial_lhs(roots, sizes, false).max_coefficient();
}

double polynomial_check_scale(const std::vector<std::vector<Complex>>& roots,
                              const NeckSizes& sizes) {
  return polynomial_lhs(roots, sizes, true).max_coefficient();
}

Configuration preset_polynomial(const std::vector<std::vector<Complex>>& roots,
                                const NeckSizes& sizes) {
  if (roots.empty() || sizes.c.size() != roots.size())
    throw Error(ErrorKind::InvalidConfiguration, "need one root list and one size per level");
  std::vector<int> n;
  for (const auto& lev : roots) n.push_back(static_cast<int>(lev.size()));
  Configuration cfg(roots, growths_from_sizes(n, sizes.c));
  const double res = polynomial_check(roots, sizes);
  const double scale = std::max(1.0, polynomial_check_scale(roots, sizes));
  if (res > 1e-9 * scale) {
    std::ostringstream os;
    os << "polynomial identity residual " << res;
    throw Error(ErrorKind::Unbalanced, os.str(), res);
  }
  return cfg;
}

}  // namespace maxface
