#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "maxface/quadrature.hpp"
#include "maxface/surface.hpp"

namespace maxface {

// Plane: coordinate z on plane l. Lower/Upper: chart v = 1/g_l (plane l) or
// w = 1/g_{l+1} (plane l+1) of a neck, glued by v w = t^2 with the waist at |v| = t.
enum class Chart { Plane, Lower, Upper };

struct ChartPoint {
  Chart chart = Chart::Plane;
  int plane = 1;
  NeckId neck;
  Complex coord;

  static ChartPoint on_plane(int plane, Complex z) { return {Chart::Plane, plane, {}, z}; }
  static ChartPoint lower(NeckId n, Complex v) { return {Chart::Lower, n.level, n, v}; }
  static ChartPoint upper(NeckId n, Complex w) { return {Chart::Upper, n.level + 1, n, w}; }
};

// A straight segment or circular arc inside one chart, parametrised by s in [0, 1].
struct PathPiece {
  enum class Shape { Line, Arc };
  Chart chart = Chart::Plane;
  int plane = 1;
  NeckId neck;
  Shape shape = Shape::Line;
  Complex p0, p1;
  Complex center;
  double radius = 0.0, a0 = 0.0, a1 = 0.0;

  Complex at(double s) const;
  Complex velocity(double s) const;
  Complex start() const { return at(0.0); }
  Complex end() const { return at(1.0); }

  static PathPiece line(Chart c, int plane, NeckId n, Complex from, Complex to);
  static PathPiece arc(Chart c, int plane, NeckId n, Complex center, double radius, double from,
                       double to);
};

using Path = std::vector<PathPiece>;

// Disk of one node on its plane.
struct NodeDisk {
  NodeRef ref;
  Complex x;
  double ring_radius = 0.0;  // max |z - x| on |u| = epsilon
  double outer_radius = 0.0; // max |z - x| on |u| = 2 epsilon
  double port_radius = 0.0;  // paths stay outside this circle
  Complex gate;              // z at u = epsilon
  Complex port;              // point of the port circle on the ray through gate
};

struct Obstacle {
  Complex center;
  double radius;
};

class SurfaceAtlas {
 public:
  // Throws DisksOverlap when the 2 epsilon disks are not disjoint or contain a zero of g.
  explicit SurfaceAtlas(SurfaceModel model);

  const SurfaceModel& model() const { return *model_; }
  double epsilon() const { return model_->params().epsilon; }
  double t() const { return model_->t(); }
  int plane_count() const { return model_->plane_count(); }

  const std::vector<NodeDisk>& disks(int plane) const { return disks_.at(plane - 1); }
  const NodeDisk& disk(NeckId neck, bool upper) const;
  const std::vector<Complex>& gauss_zeros(int plane) const { return zeros_.at(plane - 1); }
  const std::vector<Obstacle>& obstacles(int plane) const { return obstacles_.at(plane - 1); }
  Complex base_point(int plane) const { return base_.at(plane - 1); }
  const std::array<double, 3>& base_offset(int plane) const { return offset_.at(plane - 1); }
  Complex center(int plane) const;

  // Integrand in a chart, already multiplied by d(coord).
  Triple integrand(Chart chart, int plane, NeckId neck, Complex coord) const;
  Triple integrate(const PathPiece& piece) const;
  Triple integrate(const Path& path) const;

  // Path on a plane avoiding node and zero disks. Throws PathThroughPole.
  Path route(int plane, Complex from, Complex to) const;
  // From the port of one side of a neck to the other side's port, through the waist at angle 0.
  Path through_neck(NeckId neck, bool from_upper) const;
  // From the base point of the point's plane to the point.
  Path path_to(const ChartPoint& p) const;

 private:
  void build_disks();
  void place_base_points();

  std::shared_ptr<const SurfaceModel> model_;
  std::vector<std::vector<NodeDisk>> disks_;
  std::vector<std::vector<Complex>> zeros_;
  std::vector<std::vector<Obstacle>> obstacles_;
  std::vector<Complex> base_;
  std::vector<std::array<double, 3>> offset_;
};

// Throws UnreachablePoint, OutsideAnnulus, PathThroughPole.
std::array<double, 3> immerse(const SurfaceAtlas& atlas, const ChartPoint& p);

// Slope of x3 against log|z| along a ray of plane l, |z| in [r0, r1].
double end_growth_fit(const SurfaceAtlas& atlas, int plane, double r0 = 10.0, double r1 = 100.0);

struct CycleId {
  enum class Kind { Gamma, Threading };
  Kind kind = Kind::Gamma;
  NeckId neck;
  bool upper = false;  // gamma around the b-node instead of the a-node
  std::string name() const;
};

struct PeriodDefect {
  CycleId cycle;
  Complex horizontal;  // conj(int dh/g) + int g dh
  double vertical = 0.0;
};

// Small circles around every node plus the neck-threading loops (l,k), k >= 2.
std::vector<CycleId> homology_basis(const SurfaceParams& params);
// Small clockwise circle straight from the glued model; radius <= 0 picks
// 0.24 * (distance to the nearest other node). Needs no atlas, so it also
// works where the chart disks are too large to be univalent.
PeriodDefect gamma_defect(const SurfaceModel& model, const CycleId& cycle, double radius = 0.0);
PeriodDefect period_defect(const SurfaceAtlas& atlas, const CycleId& cycle);
std::vector<PeriodDefect> all_period_defects(const SurfaceAtlas& atlas);

}  // namespace maxface
