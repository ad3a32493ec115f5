#pragma once

#include <functional>
#include <string>
#include <vector>

#include "maxface/configuration.hpp"
#include "maxface/trig_polynomial.hpp"

namespace maxface {

struct SymmetryEvidence {
  NeckId neck;
  // Largest r such that rotating by 2pi/r about the neck preserves every
  // level; meaningless when rotation_unbounded (a lone neck).
  int rotational_order = 1;
  bool rotation_unbounded = false;
  // Mirror lines through the neck, angles in [0, pi) in the p-plane.
  std::vector<double> vertical_mirror_angles;
  bool horizontal_mirror = false;
  // Waist angles (v-plane, [0, 2pi)) fixed by the vertical mirrors.
  std::vector<double> waist_fixed_angles;
};

SymmetryEvidence detect_symmetries(const Configuration& config, NeckId neck);

enum class PredictionKind { ConeLike, Discrete, Undetermined };
enum class TypeClaim { Swallowtail, Unverified, None };

struct SingularityPrediction {
  NeckId neck;
  PredictionKind kind = PredictionKind::Undetermined;
  int leading_order = 0;  // m: first R^{(m-1)} that does not vanish
  int count = 0;          // 2m
  std::vector<double> angles;
  TypeClaim type_claim = TypeClaim::None;
  std::string claim_basis;  // "leading order 2" | "rotational symmetry" | ...
  TrigPolynomial leading;
  SymmetryEvidence symmetry;
};

inline constexpr int kMaxLeadingOrderSearch = 16;

SingularityPrediction predict(const Configuration& config, const NeckSizes& sizes, NeckId neck,
                              int r_max = kMaxLeadingOrderSearch);

enum class PointClass { CuspidalEdge, Swallowtail, GeneralizedA, DegenerateFrontViolation };

struct ClassifiedPoint {
  double theta = 0.0;
  PointClass cls = PointClass::CuspidalEdge;
  // For GeneralizedA: the A-index k+2 from the derivative ladder;
  // 0 when every tested derivative vanished.
  int a_index = 0;
};

struct FiniteTClassification {
  double t = 0.0;
  std::vector<double> theta_grid;
  std::vector<Complex> values;
  std::vector<ClassifiedPoint> points;  // non-cuspidal points, ascending theta
  bool cone_like = false;

  // Class at an arbitrary angle: a listed point within `tol`, else CuspidalEdge.
  PointClass class_at(double theta, double tol) const;
};

// theta_grid must be uniform on [0, 2pi). `evaluator` refines zeros.
FiniteTClassification classify_at_t(double t, std::vector<double> theta_grid,
                                    std::vector<Complex> values,
                                    const std::function<Complex(double)>& evaluator,
                                    double tol = 1e-9);

// Samples `evaluator` on `samples` uniform angles and classifies.
FiniteTClassification classify_function(double t, int samples,
                                        const std::function<Complex(double)>& evaluator,
                                        double tol = 1e-9);

bool vertical_mirror_noncuspidal_check(const SymmetryEvidence& evidence,
                                       const FiniteTClassification& classification);

const char* to_string(PredictionKind kind);
const char* to_string(TypeClaim claim);
std::string to_string(const ClassifiedPoint& point);
const char* to_string(PointClass cls);

}  // namespace maxface
