#pragma once

#include <vector>

#include "maxface/atlas.hpp"

namespace maxface {

// Stacked real residuals: dh at the zeros of g (divisor), vertical periods
// of the threading loops, horizontal periods of every cycle.
std::vector<double> defect_vector(const SurfaceParams& params, const GlueOptions& glue = {});
double defect_norm(const SurfaceParams& params, const GlueOptions& glue = {});

struct RefineOptions {
  int max_steps = 5;
  double fd_step = 1e-7;
  GlueOptions glue;
};

struct RefineResult {
  SurfaceParams params;
  double initial_norm = 0.0;
  double final_norm = 0.0;
  int steps = 0;
  std::vector<double> history;
};

// Gauss-Newton with forward-difference Jacobian, truncated SVD solve and step halving.
// Free: a, b, alpha, beta, r, except a_{1,1}, the second a (gauge) and
// b_{l,1} = conj(a_{l,1}); R follows from r.
// Throws NoImprovement, SingularJacobian.
RefineResult refine_params(const SurfaceParams& params, const RefineOptions& options = {});

}  // namespace maxface
