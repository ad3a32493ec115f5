#pragma once

#include <vector>

#include "maxface/configuration.hpp"

namespace maxface {

// Finite-t Weierstrass parameters. Ragged lists are indexed [l-1][k-1] like
// Configuration positions: a_{l,k} lives on plane l, b_{l,k} on plane l+1.
struct SurfaceParams {
  double t = 0.0;
  double epsilon = 0.0;
  std::vector<std::vector<Complex>> a, b, alpha, beta;
  std::vector<std::vector<double>> r;
  std::vector<double> R;

  int plane_count() const { return static_cast<int>(R.size()); }
  int necks_at(int level) const;
  std::vector<NeckId> necks() const;
};

// a = conj(p) on odd levels, p on even levels; b = conj(a); -alpha = beta = r = c; R = Q.
// epsilon <= 0 picks default_epsilon. Throws DisksOverlap.
SurfaceParams initial_params(const Configuration& config, const NeckSizes& sizes, double t,
                             double epsilon = 0.0);

// 0.15 * min over nodes of (distance to nearest other pole or zero of g_l) / |residue|.
double default_epsilon(const SurfaceParams& params);

// g on plane l: t g_l (odd l) or 1/(t g_l) (even l). Throws PoleEvaluation.
Complex gauss_map(const SurfaceParams& params, int plane, Complex z);
// g_l itself.
Complex level_gauss(const SurfaceParams& params, int plane, Complex z);
// t -> 0 limit of dh/dz. Throws PoleEvaluation.
Complex height_diff(const SurfaceParams& params, int plane, Complex z);

// A node of plane l: either a_{l,k} (lower side of neck (l,k), chart v) or
// b_{l-1,k} (upper side of neck (l-1,k), chart w).
struct NodeRef {
  NeckId neck;
  bool upper = false;
};

struct GlueOptions {
  bool tails = true;
  int tail_order = 6;
  int iterations = 5;
  int contour_points = 256;
};

// Meromorphic data on one plane: g_l and the working height differential,
// which is the limit form plus exact-derivative tails at every node.
struct PlaneData {
  int plane = 0;
  std::vector<Complex> x;
  std::vector<Complex> g_res;
  std::vector<Complex> h_res;
  std::vector<NodeRef> refs;
  // tails[i][q] multiplies (z - x_i)^{-(q+1)}, q >= 1
  std::vector<std::vector<Complex>> tails;

  Complex g(Complex z) const;
  Complex dg(Complex z) const;
  Complex dh(Complex z) const;
  Complex ddh(Complex z) const;
  Complex dh_limit(Complex z) const;
  int node_of(NeckId neck, bool upper) const;
  // Distance from node i to the nearest other node.
  double separation(int i) const;
  // Finite zeros of g_l.
  std::vector<Complex> gauss_zeros() const;
};

class SurfaceModel {
 public:
  explicit SurfaceModel(SurfaceParams params, GlueOptions options = {});

  const SurfaceParams& params() const { return params_; }
  double t() const { return params_.t; }
  int plane_count() const { return params_.plane_count(); }
  const PlaneData& plane(int l) const { return planes_.at(l - 1); }

  // Plane and node index carrying the chart of one side of a neck.
  int plane_of(NeckId neck, bool upper) const { return upper ? neck.level + 1 : neck.level; }
  int node_of(NeckId neck, bool upper) const;

  Complex gauss(int plane, Complex z) const;
  // Inverse of the chart u = 1/g_l near the node; Newton from x + rho u.
  Complex z_of_chart(NeckId neck, bool upper, Complex u) const;
  Complex z_of_chart(NeckId neck, bool upper, Complex u, Complex guess) const;
  // dz/du at z for the chart u = 1/g_l.
  Complex dz_du(int plane, Complex z) const;

 private:
  void glue();

  SurfaceParams params_;
  GlueOptions options_;
  std::vector<PlaneData> planes_;
};

// A = v dh/dv at v = t e^{i theta} on the lower side of the neck.
// Throws OutsideAnnulus when t >= epsilon.
Complex governing_A(const SurfaceModel& model, NeckId neck, double theta);

struct DivisorReport {
  std::vector<double> per_plane;  // max distance between zero sets per plane
  double max = 0.0;
};

// Zeros of g_l against zeros of the working dh/dz on each plane.
DivisorReport divisor_defect(const SurfaceModel& model);

}  // namespace maxface
