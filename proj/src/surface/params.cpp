#include <algorithm>
#include <cmath>
#include <limits>

#include "maxface/polynomial.hpp"
#include "maxface/surface.hpp"

namespace maxface {

int SurfaceParams::necks_at(int level) const {
  if (level < 1 || level > static_cast<int>(a.size())) return 0;
  return static_cast<int>(a[level - 1].size());
}

std::vector<NeckId> SurfaceParams::necks() const {
  std::vector<NeckId> out;
  for (int l = 1; l <= static_cast<int>(a.size()); ++l)
    for (int k = 1; k <= necks_at(l); ++k) out.push_back({l, k});
  return out;
}

namespace {

struct Nodes {
  std::vector<Complex> x, rho;
};

// Poles of g_l on plane l with their g-residues.
Nodes plane_nodes(const SurfaceParams& p, int plane) {
  Nodes n;
  if (plane <= static_cast<int>(p.a.size()))
    for (std::size_t k = 0; k < p.a[plane - 1].size(); ++k) {
      n.x.push_back(p.a[plane - 1][k]);
      n.rho.push_back(p.alpha[plane - 1][k]);
    }
  if (plane >= 2)
    for (std::size_t k = 0; k < p.b[plane - 2].size(); ++k) {
      n.x.push_back(p.b[plane - 2][k]);
      n.rho.push_back(p.beta[plane - 2][k]);
    }
  return n;
}

std::vector<Complex> gauss_zeros(const Nodes& n) {
  Polynomial num({0.0});
  for (std::size_t j = 0; j < n.x.size(); ++j) {
    std::vector<Complex> others;
    for (std::size_t i = 0; i < n.x.size(); ++i)
      if (i != j) others.push_back(n.x[i]);
    num = num + Polynomial::from_roots(others) * n.rho[j];
  }
  // trim negligible leading coefficients
  auto c = num.coeffs();
  double scale = num.max_coefficient();
  while (c.size() > 1 && std::abs(c.back()) <= 1e-13 * scale) c.pop_back();
  if (c.size() <= 1) return {};
  return Polynomial(c).roots();
}

void check_plane(const SurfaceParams& p) {
  if (p.a.size() + 1 != p.R.size() || p.b.size() != p.a.size() || p.alpha.size() != p.a.size() ||
      p.beta.size() != p.a.size() || p.r.size() != p.a.size())
    throw Error(ErrorKind::InvalidConfiguration, "inconsistent parameter shapes");
}

Complex checked_sum(const std::vector<Complex>& x, const std::vector<Complex>& res, Complex z) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Complex d = z - x[i];
    if (std::abs(d) <= 1e-14 * std::max(1.0, std::abs(z)))
      throw Error(ErrorKind::PoleEvaluation, "evaluation at a node");
    s += res[i] / d;
  }
  return s;
}

}  // namespace

double default_epsilon(const SurfaceParams& p) {
  check_plane(p);
  double best = std::numeric_limits<double>::infinity();
  double diam = 0.0;
  for (int l = 1; l <= p.plane_count(); ++l) {
    Nodes n = plane_nodes(p, l);
    auto zeros = gauss_zeros(n);
    for (std::size_t i = 0; i < n.x.size(); ++i) {
      double d = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n.x.size(); ++j)
        if (j != i) {
          d = std::min(d, std::abs(n.x[i] - n.x[j]));
          diam = std::max(diam, std::abs(n.x[i] - n.x[j]));
        }
      for (Complex zeta : zeros) d = std::min(d, std::abs(n.x[i] - zeta));
      best = std::min(best, d / std::abs(n.rho[i]));
    }
  }
  return std::min(0.15 * best, std::max(1.0, diam));
}

SurfaceParams initial_params(const Configuration& config, const NeckSizes& sizes, double t,
                             double epsilon) {
  if (!(t > 0.0)) throw Error(ErrorKind::InvalidConfiguration, "t must be positive", t);
  SurfaceParams p;
  p.t = t;
  const int L = config.plane_count();
  for (int l = 1; l < L; ++l) {
    std::vector<Complex> a, b, al, be;
    std::vector<double> r;
    double c = sizes.at(l);
    for (Complex z : config.positions(l)) {
      Complex al_pos = (l % 2 == 1) ? std::conj(z) : z;
      a.push_back(al_pos);
      b.push_back(std::conj(al_pos));
      al.push_back(-c);
      be.push_back(c);
      r.push_back(c);
    }
    p.a.push_back(a);
    p.b.push_back(b);
    p.alpha.push_back(al);
    p.beta.push_back(be);
    p.r.push_back(r);
  }
  p.R = config.growths();
  p.epsilon = epsilon > 0.0 ? epsilon : default_epsilon(p);
  if (t >= p.epsilon)
    throw Error(ErrorKind::DisksOverlap, "t must be smaller than epsilon", p.epsilon);
  // linearised disk test: |z - x| ~ |rho| |v| for |v| <= 2 epsilon
  for (int l = 1; l <= L; ++l) {
    Nodes n = plane_nodes(p, l);
    auto zeros = gauss_zeros(n);
    for (std::size_t i = 0; i < n.x.size(); ++i) {
      double ri = 2.0 * p.epsilon * std::abs(n.rho[i]);
      for (std::size_t j = i + 1; j < n.x.size(); ++j)
        if (ri + 2.0 * p.epsilon * std::abs(n.rho[j]) >= std::abs(n.x[i] - n.x[j]))
          throw Error(ErrorKind::DisksOverlap, "node disks overlap on plane " + std::to_string(l),
                      p.epsilon);
      for (Complex zeta : zeros)
        if (ri >= std::abs(n.x[i] - zeta))
          throw Error(ErrorKind::DisksOverlap,
                      "node disk contains a zero of g on plane " + std::to_string(l), p.epsilon);
    }
  }
  return p;
}

Complex level_gauss(const SurfaceParams& p, int plane, Complex z) {
  check_plane(p);
  Nodes n = plane_nodes(p, plane);
  return checked_sum(n.x, n.rho, z);
}

Complex gauss_map(const SurfaceParams& p, int plane, Complex z) {
  Complex g = level_gauss(p, plane, z);
  return plane % 2 == 1 ? p.t * g : 1.0 / (p.t * g);
}

Complex height_diff(const SurfaceParams& p, int plane, Complex z) {
  check_plane(p);
  std::vector<Complex> x, res;
  if (plane <= static_cast<int>(p.a.size()))
    for (std::size_t k = 0; k < p.a[plane - 1].size(); ++k) {
      x.push_back(p.a[plane - 1][k]);
      res.push_back(-p.r[plane - 1][k]);
    }
  if (plane >= 2)
    for (std::size_t k = 0; k < p.b[plane - 2].size(); ++k) {
      x.push_back(p.b[plane - 2][k]);
      res.push_back(p.r[plane - 2][k]);
    }
  return checked_sum(x, res, z);
}

}  // namespace maxface
