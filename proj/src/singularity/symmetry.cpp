#include <algorithm>
#include <cmath>
#include <numbers>

#include "maxface/singularity.hpp"

namespace maxface {

using std::numbers::pi;

namespace {

bool same_set(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (Complex z : a) {
    bool hit = false;
    for (std::size_t j = 0; j < b.size() && !hit; ++j)
      if (!used[j] && std::abs(z - b[j]) <= tol) used[j] = hit = true;
    if (!hit) return false;
  }
  return true;
}

template <class Map>
std::vector<Complex> mapped(const std::vector<Complex>& pts, Map f) {
  std::vector<Complex> out;
  for (Complex z : pts) out.push_back(f(z));
  return out;
}

double wrap(double a, double period) {
  a = std::fmod(a, period);
  if (a < 0) a += period;
  if (period - a < 1e-12) a = 0.0;
  return a;
}

}  // namespace

SymmetryEvidence detect_symmetries(const Configuration& config, NeckId neck) {
  SymmetryEvidence ev;
  ev.neck = neck;
  const Complex center = config.position(neck);
  const int L = config.plane_count();
  std::vector<std::vector<Complex>> levels;
  double scale = 1.0;
  int n_max = 0;
  bool lone = true;
  for (int l = 1; l < L; ++l) {
    levels.push_back(mapped(config.positions(l), [&](Complex z) { return z - center; }));
    for (Complex z : levels.back()) {
      scale = std::max(scale, std::abs(z));
      if (std::abs(z) > 1e-12) lone = false;
    }
    n_max = std::max(n_max, config.necks_at(l));
  }
  const double tol = 1e-10 * scale;

  if (lone) {
    ev.rotation_unbounded = true;
    ev.rotational_order = 0;
  } else {
    for (int r = n_max; r >= 1; --r) {
      const Complex w = std::polar(1.0, 2 * pi / r);
      bool ok = true;
      for (const auto& lev : levels)
        if (!same_set(lev, mapped(lev, [&](Complex z) { return w * z; }), tol)) ok = false;
      if (ok) {
        ev.rotational_order = r;
        break;
      }
    }
  }

  if (!lone) {
    std::vector<double> candidates;
    for (const auto& lev : levels)
      for (std::size_t i = 0; i < lev.size(); ++i) {
        if (std::abs(lev[i]) <= tol) continue;
        candidates.push_back(wrap(std::arg(lev[i]), pi));
        for (std::size_t j = 0; j < i; ++j)
          if (std::abs(std::abs(lev[i]) - std::abs(lev[j])) <= tol && std::abs(lev[j]) > tol)
            candidates.push_back(wrap(0.5 * (std::arg(lev[i]) + std::arg(lev[j])), pi));
      }
    // the perpendicular of every candidate is a candidate too
    const std::size_t base = candidates.size();
    for (std::size_t i = 0; i < base; ++i) candidates.push_back(wrap(candidates[i] + pi / 2, pi));
    std::sort(candidates.begin(), candidates.end());
    for (double phi : candidates) {
      if (!ev.vertical_mirror_angles.empty() &&
          std::abs(phi - ev.vertical_mirror_angles.back()) < 1e-9)
        continue;
      const Complex rot = std::polar(1.0, 2 * phi);
      bool ok = true;
      for (const auto& lev : levels)
        if (!same_set(lev, mapped(lev, [&](Complex z) { return rot * std::conj(z); }), tol)) ok = false;
      if (ok) ev.vertical_mirror_angles.push_back(phi);
    }
    if (ev.vertical_mirror_angles.size() >= 2 &&
        std::abs(ev.vertical_mirror_angles.front() + pi - ev.vertical_mirror_angles.back()) < 1e-9)
      ev.vertical_mirror_angles.pop_back();
  }

  // Level reversal l <-> L-l of neck levels, planes l <-> L+1-l.
  bool horizontal = true;
  double qscale = 0.0;
  for (double q : config.growths()) qscale = std::max(qscale, std::abs(q));
  for (int l = 1; l <= L && horizontal; ++l)
    if (std::abs(config.growth(l) + config.growth(L + 1 - l)) > 1e-12 * std::max(1.0, qscale))
      horizontal = false;
  for (int l = 1; l < L && horizontal; ++l)
    if (!same_set(config.positions(l), config.positions(L - l), tol)) horizontal = false;
  ev.horizontal_mirror = horizontal && 2 * neck.level == L;

  // v = 1/g_l reproduces the mirror line; odd levels use conjugated coordinates.
  for (double phi : ev.vertical_mirror_angles) {
    const double psi = (neck.level % 2 == 1) ? -phi : phi;
    ev.waist_fixed_angles.push_back(wrap(psi, 2 * pi));
    ev.waist_fixed_angles.push_back(wrap(psi + pi, 2 * pi));
  }
  std::sort(ev.waist_fixed_angles.begin(), ev.waist_fixed_angles.end());
  return ev;
}

}  // namespace maxface
