#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "maxface/singularity.hpp"

namespace maxface {

using std::numbers::pi;

const char* to_string(PointClass cls) {
  switch (cls) {
    case PointClass::CuspidalEdge: return "CuspidalEdge";
    case PointClass::Swallowtail: return "Swallowtail";
    case PointClass::GeneralizedA: return "GeneralizedA";
    case PointClass::DegenerateFrontViolation: return "Degenerate-front-violation";
  }
  return "?";
}

std::string to_string(const ClassifiedPoint& p) {
  if (p.cls != PointClass::GeneralizedA) return to_string(p.cls);
  std::ostringstream os;
  os << "GeneralizedA(";
  if (p.a_index > 0)
    os << p.a_index;
  else
    os << ">=7";
  os << ")";
  return os.str();
}

namespace {

double angle_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2 * pi);
  return std::min(d, 2 * pi - d);
}

// Central differences of order 1..4, one Richardson step (h, h/2).
double ladder_derivative(const std::function<double(double)>& f, double x, int order, double h) {
  auto D = [&](double s) {
    switch (order) {
      case 1: return (f(x + s) - f(x - s)) / (2 * s);
      case 2: return (f(x + s) - 2 * f(x) + f(x - s)) / (s * s);
      case 3: return (f(x + 2 * s) - 2 * f(x + s) + 2 * f(x - s) - f(x - 2 * s)) / (2 * s * s * s);
      default:
        return (f(x + 2 * s) - 4 * f(x + s) + 6 * f(x) - 4 * f(x - s) + f(x - 2 * s)) / (s * s * s * s);
    }
  };
  return (4 * D(h / 2) - D(h)) / 3;
}

}  // namespace

PointClass FiniteTClassification::class_at(double theta, double tol) const {
  for (const auto& p : points)
    if (angle_gap(p.theta, theta) <= tol) return p.cls;
  return PointClass::CuspidalEdge;
}

FiniteTClassification classify_at_t(double t, std::vector<double> theta_grid,
                                    std::vector<Complex> values,
                                    const std::function<Complex(double)>& evaluator, double tol) {
  FiniteTClassification out;
  out.t = t;
  out.theta_grid = std::move(theta_grid);
  out.values = std::move(values);
  const int n = static_cast<int>(out.values.size());
  if (n == 0 || n != static_cast<int>(out.theta_grid.size()))
    throw Error(ErrorKind::GridTooCoarse, "empty or mismatched sample grid");
  const double spacing = 2 * pi / n;

  double amax = 0.0, imax = 0.0;
  for (Complex a : out.values) {
    amax = std::max(amax, std::abs(a));
    imax = std::max(imax, std::abs(a.imag()));
  }
  if (imax <= tol * amax) {
    out.cone_like = true;
    return out;
  }

  for (int i = 0; i < n; ++i)
    if (std::abs(out.values[i].real()) <= tol * amax)
      out.points.push_back({out.theta_grid[i], PointClass::DegenerateFrontViolation, 0});

  auto im = [&](double th) { return evaluator(th).imag(); };
  std::vector<double> zeros;
  const double zero_level = 1e-13 * imax;
  std::vector<bool> at_zero(n);
  for (int i = 0; i < n; ++i) at_zero[i] = std::abs(out.values[i].imag()) <= zero_level;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (at_zero[i]) {
      zeros.push_back(out.theta_grid[i]);
      continue;
    }
    if (at_zero[j]) continue;
    double flo = out.values[i].imag(), fhi = out.values[j].imag();
    if ((flo < 0) == (fhi < 0)) continue;
    double lo = out.theta_grid[i], hi = (j == 0) ? 2 * pi : out.theta_grid[j];
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      const double fm = im(mid);
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
    if (z >= 2 * pi) z -= 2 * pi;
    zeros.push_back(z);
  }
  std::sort(zeros.begin(), zeros.end());
  for (std::size_t i = 0; zeros.size() > 1 && i < zeros.size(); ++i) {
    const double next = (i + 1 < zeros.size()) ? zeros[i + 1] : zeros.front() + 2 * pi;
    if (next - zeros[i] < 0.5 * spacing) {
      std::ostringstream os;
      os << "zeros of Im A at " << zeros[i] << " and " << next << " closer than half a grid cell";
      throw Error(ErrorKind::GridTooCoarse, os.str());
    }
  }

  for (double z : zeros) {
    ClassifiedPoint p{z, PointClass::GeneralizedA, 0};
    for (int order = 1; order <= 4; ++order) {
      const double h = order <= 2 ? 1e-3 : 1e-2;
      if (std::abs(ladder_derivative(im, z, order, h)) > 1e-3 * imax) {
        p.a_index = order + 2;
        break;
      }
    }
    if (p.a_index == 3) p.cls = PointClass::Swallowtail;
    out.points.push_back(p);
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const ClassifiedPoint& a, const ClassifiedPoint& b) { return a.theta < b.theta; });
  return out;
}

FiniteTClassification classify_function(double t, int samples,
                                        const std::function<Complex(double)>& evaluator,
                                        double tol) {
  std::vector<double> grid(samples);
  std::vector<Complex> values(samples);
  for (int i = 0; i < samples; ++i) {
    grid[i] = 2 * pi * i / samples;
    values[i] = evaluator(grid[i]);
  }
  return classify_at_t(t, std::move(grid), std::move(values), evaluator, tol);
}

bool vertical_mirror_noncuspidal_check(const SymmetryEvidence& evidence,
                                       const FiniteTClassification& classification) {
  if (evidence.rotation_unbounded) return classification.cone_like;
  if (evidence.vertical_mirror_angles.empty())
    throw Error(ErrorKind::NoMirror, "no vertical mirror through the neck");
  if (classification.cone_like) return true;
  const double tol = classification.theta_grid.empty()
                         ? 1e-6
                         : 2 * pi / classification.theta_grid.size();
  for (double psi : evidence.waist_fixed_angles) {
    bool hit = false;
    for (const auto& p : classification.points)
      if (p.cls != PointClass::DegenerateFrontViolation && angle_gap(p.theta, psi) <= tol) hit = true;
    if (!hit) return false;
  }
  return true;
}

}  // namespace maxface
