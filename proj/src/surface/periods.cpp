#include <cmath>
#include <numbers>

#include "maxface/atlas.hpp"

namespace maxface {

namespace {

void append(Path& a, const Path& b) { a.insert(a.end(), b.begin(), b.end()); }

}  // namespace

std::string CycleId::name() const {
  std::string id = "(" + std::to_string(neck.level) + "," + std::to_string(neck.index) + ")";
  if (kind == Kind::Threading) return "Gamma" + id;
  return (upper ? "gamma'" : "gamma") + id;
}

std::vector<CycleId> homology_basis(const SurfaceParams& params) {
  std::vector<CycleId> out;
  for (NeckId n : params.necks()) {
    out.push_back({CycleId::Kind::Gamma, n, false});
    out.push_back({CycleId::Kind::Gamma, n, true});
  }
  for (NeckId n : params.necks())
    if (n.index >= 2) out.push_back({CycleId::Kind::Threading, n, false});
  return out;
}

PeriodDefect gamma_defect(const SurfaceModel& model, const CycleId& cycle, double radius) {
  int plane = model.plane_of(cycle.neck, cycle.upper);
  const PlaneData& pd = model.plane(plane);
  int i = pd.node_of(cycle.neck, cycle.upper);
  if (radius <= 0.0) {
    double sep = pd.separation(i);
    radius = std::isfinite(sep) ? 0.24 * sep : 0.5;
  }
  const Complex I(0.0, 1.0);
  // clockwise
  Triple total = integrate_periodic(
      [&](double s) {
        Complex e = std::polar(radius, -2 * std::numbers::pi * s);
        Complex z = pd.x[i] + e;
        Complex g = model.gauss(plane, z);
        Complex dh = pd.dh(z) * (-2 * std::numbers::pi * I * e);
        return Triple{dh / g, g * dh, dh};
      },
      512);
  return {cycle, total.horizontal(), std::real(total.dh)};
}

PeriodDefect period_defect(const SurfaceAtlas& atlas, const CycleId& cycle) {
  Triple total;
  if (cycle.kind == CycleId::Kind::Gamma) {
    return gamma_defect(atlas.model(), cycle, atlas.disk(cycle.neck, cycle.upper).port_radius);
  } else {
    NeckId first{cycle.neck.level, 1};
    int l = cycle.neck.level;
    Path p = atlas.through_neck(first, false);
    append(p, atlas.route(l + 1, atlas.disk(first, true).port, atlas.disk(cycle.neck, true).port));
    append(p, atlas.through_neck(cycle.neck, true));
    append(p, atlas.route(l, atlas.disk(cycle.neck, false).port, atlas.disk(first, false).port));
    total = atlas.integrate(p);
  }
  return {cycle, total.horizontal(), std::real(total.dh)};
}

std::vector<PeriodDefect> all_period_defects(const SurfaceAtlas& atlas) {
  std::vector<PeriodDefect> out;
  for (const auto& c : homology_basis(atlas.model().params())) out.push_back(period_defect(atlas, c));
  return out;
}

}  // namespace maxface
