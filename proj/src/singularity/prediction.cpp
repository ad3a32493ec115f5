#include <cmath>

#include "maxface/forces.hpp"
#include "maxface/singularity.hpp"

namespace maxface {

const char* to_string(PredictionKind kind) {
  switch (kind) {
    case PredictionKind::ConeLike: return "ConeLike";
    case PredictionKind::Discrete: return "Discrete";
    case PredictionKind::Undetermined: return "Undetermined";
  }
  return "?";
}

const char* to_string(TypeClaim claim) {
  switch (claim) {
    case TypeClaim::Swallowtail: return "Swallowtail";
    case TypeClaim::Unverified: return "Unverified";
    case TypeClaim::None: return "None";
  }
  return "?";
}

SingularityPrediction predict(const Configuration& config, const NeckSizes& sizes, NeckId neck,
                              int r_max) {
  SingularityPrediction out;
  out.neck = neck;
  out.symmetry = detect_symmetries(config, neck);
  if (out.symmetry.horizontal_mirror) {
    out.kind = PredictionKind::ConeLike;
    out.claim_basis = "horizontal mirror";
    return out;
  }
  for (int r = 1; r <= r_max; ++r) {
    TrigPolynomial R = R_function(config, sizes, neck, r);
    const double scale = R_function_scale(config, sizes, neck, r);
    if (R.is_zero(1e-9 * scale)) continue;
    const int m = r + 1;
    out.kind = PredictionKind::Discrete;
    out.leading_order = m;
    out.leading = R;
    out.angles = R.zeros();
    out.count = static_cast<int>(out.angles.size());
    if (m == 2) {
      out.type_claim = TypeClaim::Swallowtail;
      out.claim_basis = "leading order 2";
    } else if (!out.symmetry.rotation_unbounded && out.symmetry.rotational_order == m) {
      out.type_claim = TypeClaim::Swallowtail;
      out.claim_basis = "rotational symmetry of order m";
    } else {
      out.type_claim = TypeClaim::Unverified;
      out.claim_basis = "no criterion applies";
    }
    return out;
  }
  out.kind = PredictionKind::Undetermined;
  out.claim_basis = "R vanishes up to r_max";
  return out;
}

}  // namespace maxface
