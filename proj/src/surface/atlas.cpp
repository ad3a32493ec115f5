#include "maxface/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace maxface {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex I(0.0, 1.0);

double wrap(double a) {
  while (a > kPi) a -= 2 * kPi;
  while (a <= -kPi) a += 2 * kPi;
  return a;
}

PathPiece reversed(const PathPiece& p) {
  PathPiece r = p;
  if (p.shape == PathPiece::Shape::Line) {
    r.p0 = p.p1;
    r.p1 = p.p0;
  } else {
    r.a0 = p.a1;
    r.a1 = p.a0;
  }
  return r;
}

Path reversed(const Path& path) {
  Path out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(reversed(*it));
  return out;
}

void append(Path& a, const Path& b) { a.insert(a.end(), b.begin(), b.end()); }

}  // namespace

Complex PathPiece::at(double s) const {
  if (shape == Shape::Line) return p0 + s * (p1 - p0);
  return center + std::polar(radius, a0 + s * (a1 - a0));
}

Complex PathPiece::velocity(double s) const {
  if (shape == Shape::Line) return p1 - p0;
  return I * (a1 - a0) * std::polar(radius, a0 + s * (a1 - a0));
}

PathPiece PathPiece::line(Chart c, int plane, NeckId n, Complex from, Complex to) {
  PathPiece p;
  p.chart = c;
  p.plane = plane;
  p.neck = n;
  p.p0 = from;
  p.p1 = to;
  return p;
}

PathPiece PathPiece::arc(Chart c, int plane, NeckId n, Complex center, double radius, double from,
                         double to) {
  PathPiece p;
  p.chart = c;
  p.plane = plane;
  p.neck = n;
  p.shape = Shape::Arc;
  p.center = center;
  p.radius = radius;
  p.a0 = from;
  p.a1 = to;
  return p;
}

SurfaceAtlas::SurfaceAtlas(SurfaceModel model)
    : model_(std::make_shared<const SurfaceModel>(std::move(model))) {
  if (t() >= epsilon()) throw Error(ErrorKind::DisksOverlap, "t must be smaller than epsilon", t());
  build_disks();
  place_base_points();
}

void SurfaceAtlas::build_disks() {
  const SurfaceModel& m = *model_;
  const double eps = epsilon();
  const int S = 64;
  disks_.assign(plane_count(), {});
  zeros_.assign(plane_count(), {});
  obstacles_.assign(plane_count(), {});
  for (int l = 1; l <= plane_count(); ++l) {
    const PlaneData& pd = m.plane(l);
    zeros_[l - 1] = pd.gauss_zeros();
    for (std::size_t i = 0; i < pd.x.size(); ++i) {
      NodeDisk d;
      d.ref = pd.refs[i];
      d.x = pd.x[i];
      for (double scale : {1.0, 2.0}) {
        double rmax = 0.0;
        Complex z = pd.x[i] + pd.g_res[i] * (scale * eps);
        for (int j = 0; j < S; ++j) {
          Complex u = std::polar(scale * eps, 2 * kPi * j / S);
          try {
            z = m.z_of_chart(d.ref.neck, d.ref.upper, u, z);
            Complex direct = m.z_of_chart(d.ref.neck, d.ref.upper, u);
            if (std::abs(direct - z) > 1e-9 * std::max(1.0, std::abs(z))) throw Error(ErrorKind::OutsideAnnulus, "");
          } catch (const Error&) {
            throw Error(ErrorKind::DisksOverlap,
                        "chart of node " + std::to_string(i + 1) + " on plane " + std::to_string(l) +
                            " is not univalent",
                        eps);
          }
          rmax = std::max(rmax, std::abs(z - pd.x[i]));
          if (scale == 1.0 && j == 0) d.gate = z;
        }
        (scale == 1.0 ? d.ring_radius : d.outer_radius) = rmax;
      }
      d.port_radius = 0.5 * (d.ring_radius + d.outer_radius);
      d.port = d.x + d.port_radius * (d.gate - d.x) / std::abs(d.gate - d.x);
      disks_[l - 1].push_back(d);
    }
    const auto& ds = disks_[l - 1];
    for (std::size_t i = 0; i < ds.size(); ++i) {
      for (std::size_t j = i + 1; j < ds.size(); ++j)
        if (ds[i].outer_radius + ds[j].outer_radius >= std::abs(ds[i].x - ds[j].x))
          throw Error(ErrorKind::DisksOverlap, "node disks overlap on plane " + std::to_string(l), eps);
      for (Complex zeta : zeros_[l - 1])
        if (std::abs(zeta - ds[i].x) <= ds[i].outer_radius)
          throw Error(ErrorKind::DisksOverlap,
                      "node disk contains a zero of g on plane " + std::to_string(l), eps);
    }
    for (const auto& d : ds) obstacles_[l - 1].push_back({d.x, d.port_radius});
    const auto& zs = zeros_[l - 1];
    for (std::size_t i = 0; i < zs.size(); ++i) {
      double room = std::numeric_limits<double>::infinity();
      for (const auto& d : ds) room = std::min(room, std::abs(zs[i] - d.x) - d.port_radius);
      for (std::size_t j = 0; j < zs.size(); ++j)
        if (j != i) room = std::min(room, 0.5 * std::abs(zs[i] - zs[j]));
      if (!std::isfinite(room)) room = 1.0;
      obstacles_[l - 1].push_back({zs[i], 0.3 * room});
    }
  }
}

Complex SurfaceAtlas::center(int plane) const {
  const auto& ds = disks(plane);
  Complex c = 0.0;
  for (const auto& d : ds) c += d.x;
  return ds.empty() ? c : c / static_cast<double>(ds.size());
}

void SurfaceAtlas::place_base_points() {
  base_.clear();
  for (int l = 1; l <= plane_count(); ++l) {
    const auto& obs = obstacles(l);
    double scale = 0.0;
    for (const auto& o : obs) scale = std::max(scale, o.radius);
    auto clear = [&](Complex z) {
      for (const auto& o : obs)
        if (std::abs(z - o.center) < 1.5 * o.radius) return false;
      return true;
    };
    Complex c = center(l);
    Complex best = c;
    bool found = clear(c);
    for (int ring = 1; !found && ring < 200; ++ring)
      for (int j = 0; j < 12 && !found; ++j) {
        Complex z = c + std::polar(0.5 * ring * scale, 0.3 + 2 * kPi * j / 12);
        if (clear(z)) {
          best = z;
          found = true;
        }
      }
    if (!found) throw Error(ErrorKind::UnreachablePoint, "no base point on plane " + std::to_string(l));
    base_.push_back(best);
  }
  offset_.assign(plane_count(), {0.0, 0.0, 0.0});
  for (int l = 1; l < plane_count(); ++l) {
    NeckId n{l, 1};
    Path p = route(l, base_point(l), disk(n, false).port);
    append(p, through_neck(n, false));
    append(p, route(l + 1, disk(n, true).port, base_point(l + 1)));
    auto x = integrate(p).position();
    for (int k = 0; k < 3; ++k) offset_[l][k] = offset_[l - 1][k] + x[k];
  }
}

const NodeDisk& SurfaceAtlas::disk(NeckId neck, bool upper) const {
  int l = model_->plane_of(neck, upper);
  return disks(l).at(model_->node_of(neck, upper));
}

Triple SurfaceAtlas::integrand(Chart chart, int plane, NeckId neck, Complex coord) const {
  const SurfaceModel& m = *model_;
  Complex z = coord, jac = 1.0;
  if (chart != Chart::Plane) {
    bool upper = chart == Chart::Upper;
    plane = m.plane_of(neck, upper);
    z = m.z_of_chart(neck, upper, coord);
    jac = m.dz_du(plane, z);
  }
  Complex g = m.gauss(plane, z);
  Complex dh = m.plane(plane).dh(z) * jac;
  return {dh / g, g * dh, dh};
}

Triple SurfaceAtlas::integrate(const PathPiece& piece) const {
  return maxface::integrate(
      [&](double s) { return integrand(piece.chart, piece.plane, piece.neck, piece.at(s)) * piece.velocity(s); },
      0.0, 1.0);
}

Triple SurfaceAtlas::integrate(const Path& path) const {
  Triple s;
  for (const auto& p : path) s += integrate(p);
  return s;
}

Path SurfaceAtlas::route(int plane, Complex from, Complex to) const {
  const auto& obs = obstacles(plane);
  for (const auto& d : disks(plane))
    for (Complex z : {from, to})
      if (std::abs(z - d.x) <= 1e-12 * std::max(1.0, std::abs(z)))
        throw Error(ErrorKind::PathThroughPole, "path endpoint at a node");
  Path head, tail;
  // endpoints inside a disk leave it radially
  auto escape = [&](Complex z, Path& seg, bool outward) {
    for (const auto& o : obs) {
      double r = std::abs(z - o.center);
      if (r < o.radius * (1 - 1e-12)) {
        Complex edge = o.center + o.radius * (z - o.center) / r;
        seg.push_back(outward ? PathPiece::line(Chart::Plane, plane, {}, z, edge)
                              : PathPiece::line(Chart::Plane, plane, {}, edge, z));
        return edge;
      }
    }
    return z;
  };
  Complex cur = escape(from, head, true);
  Complex end = escape(to, tail, false);
  Path mid;
  const double tiny = 1e-10;
  for (int guard = 0; guard < 10000; ++guard) {
    Complex d = end - cur;
    double len = std::abs(d);
    if (len == 0.0) break;
    double best_in = 2.0, best_out = 0.0;
    const Obstacle* hit = nullptr;
    for (const auto& o : obs) {
      // |cur + s d - c|^2 = r^2
      Complex f = cur - o.center;
      double A = std::norm(d), B = 2 * std::real(std::conj(f) * d), C = std::norm(f) - o.radius * o.radius;
      double disc = B * B - 4 * A * C;
      if (disc <= 0) continue;
      double sq = std::sqrt(disc);
      double s1 = (-B - sq) / (2 * A), s2 = (-B + sq) / (2 * A);
      if (s2 <= tiny || s1 >= 1 - tiny || (s2 - s1) * len <= tiny * o.radius) continue;
      double sin = std::max(s1, 0.0);
      if (sin < best_in) {
        best_in = sin;
        best_out = std::min(s2, 1.0);
        hit = &o;
      }
    }
    if (!hit) {
      mid.push_back(PathPiece::line(Chart::Plane, plane, {}, cur, end));
      break;
    }
    Complex entry = cur + best_in * d, exit = cur + best_out * d;
    if (best_in > 0) mid.push_back(PathPiece::line(Chart::Plane, plane, {}, cur, entry));
    double a0 = std::arg(entry - hit->center);
    double sweep = wrap(std::arg(exit - hit->center) - a0);
    if (std::abs(sweep) >= kPi - 1e-12) sweep = kPi;
    mid.push_back(PathPiece::arc(Chart::Plane, plane, {}, hit->center, hit->radius, a0, a0 + sweep));
    cur = exit;
    if (best_out >= 1.0) break;
  }
  Path out = head;
  append(out, mid);
  append(out, tail);
  return out;
}

Path SurfaceAtlas::through_neck(NeckId neck, bool from_upper) const {
  const NodeDisk& lo = disk(neck, false);
  const NodeDisk& up = disk(neck, true);
  const double eps = epsilon();
  Path p{PathPiece::line(Chart::Plane, neck.level, {}, lo.port, lo.gate),
         PathPiece::line(Chart::Lower, neck.level, neck, eps, t()),
         PathPiece::line(Chart::Upper, neck.level + 1, neck, t(), eps),
         PathPiece::line(Chart::Plane, neck.level + 1, {}, up.gate, up.port)};
  return from_upper ? reversed(p) : p;
}

Path SurfaceAtlas::path_to(const ChartPoint& p) const {
  if (p.chart == Chart::Plane) {
    const PlaneData& pd = model_->plane(p.plane);
    for (const auto& d : disks(p.plane)) {
      double r = std::abs(p.coord - d.x);
      if (r <= 1e-12 * std::max(1.0, std::abs(p.coord)))
        throw Error(ErrorKind::PathThroughPole, "point is a node");
      if (r < d.port_radius && std::abs(1.0 / pd.g(p.coord)) < epsilon() * (1 - 1e-12))
        throw Error(ErrorKind::UnreachablePoint, "point lies inside a neck disk; use the neck chart");
    }
    return route(p.plane, base_point(p.plane), p.coord);
  }
  bool upper = p.chart == Chart::Upper;
  Complex u = p.coord;
  if (std::abs(u) < t()) {
    if (u == 0.0) throw Error(ErrorKind::OutsideAnnulus, "chart origin is not on the surface");
    upper = !upper;
    u = t() * t() / u;
  }
  if (std::abs(u) > 2 * epsilon())
    throw Error(ErrorKind::OutsideAnnulus, "chart point beyond 2 epsilon", std::abs(u));
  Chart chart = upper ? Chart::Upper : Chart::Lower;
  int plane = model_->plane_of(p.neck, upper);
  const NodeDisk& d = disk(p.neck, upper);
  Path path = route(plane, base_point(plane), d.port);
  path.push_back(PathPiece::line(Chart::Plane, plane, {}, d.port, d.gate));
  double rho = std::abs(u);
  if (std::abs(rho - epsilon()) > 0) path.push_back(PathPiece::line(chart, plane, p.neck, epsilon(), rho));
  double ang = std::arg(u);
  if (ang != 0.0) path.push_back(PathPiece::arc(chart, plane, p.neck, 0.0, rho, 0.0, ang));
  return path;
}

}  // namespace maxface
