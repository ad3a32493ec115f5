#include <cmath>

#include "maxface/atlas.hpp"

namespace maxface {

std::array<double, 3> immerse(const SurfaceAtlas& atlas, const ChartPoint& p) {
  int plane = p.plane;
  if (p.chart != Chart::Plane) {
    bool upper = p.chart == Chart::Upper;
    if (std::abs(p.coord) < atlas.t()) upper = !upper;
    plane = atlas.model().plane_of(p.neck, upper);
  }
  Path path = atlas.path_to(p);
  auto x = atlas.integrate(path).position();
  const auto& b = atlas.base_offset(plane);
  return {b[0] + x[0], b[1] + x[1], b[2] + x[2]};
}

double end_growth_fit(const SurfaceAtlas& atlas, int plane, double r0, double r1) {
  const int N = 9;
  Complex c = atlas.center(plane);
  Complex dir = std::polar(1.0, 0.3);
  double h = 0.0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  Complex prev = c + r0 * dir;
  for (int j = 0; j < N; ++j) {
    double s = r0 * std::pow(r1 / r0, static_cast<double>(j) / (N - 1));
    Complex z = c + s * dir;
    if (j > 0) h += atlas.integrate(atlas.route(plane, prev, z)).position()[2];
    prev = z;
    double x = std::log(std::abs(z));
    sx += x;
    sy += h;
    sxx += x * x;
    sxy += x * h;
  }
  return (N * sxy - sx * sy) / (N * sxx - sx * sx);
}

}  // namespace maxface
