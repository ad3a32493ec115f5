#pragma once

#include "maxface/configuration.hpp"
#include "maxface/trig_polynomial.hpp"

namespace maxface {

Complex force(const Configuration& config, const NeckSizes& sizes, NeckId neck);

// 1/2 Res_{p_{l,k}} (omega_l^2 + omega_{l+1}^2)/dz
Complex force_via_residue(const Configuration& config, const NeckSizes& sizes,
                          NeckId neck);

std::vector<Complex> all_forces(const Configuration& config, const NeckSizes& sizes);
double max_force(const Configuration& config, const NeckSizes& sizes);

struct ScalarW {
  Complex sum_form;
  double closed_form;
};

ScalarW scalar_W(const Configuration& config, const NeckSizes& sizes);

// Coefficient of (z-p)^{-1} in f^power where omega = f dz.
Complex residue_power(const LevelForm& form, Complex pole_position, int power);

// Same expansion run on absolute values; an upper bound for the size of the
// terms that cancel inside residue_power. Used to judge "numerically zero".
double residue_power_magnitude(const LevelForm& form, Complex pole_position,
                               int power);

TrigPolynomial R_function(const Configuration& config, const NeckSizes& sizes,
                          NeckId neck, int r);

// Cancellation scale matching R_function (same frequency, bound on |amplitude|).
double R_function_scale(const Configuration& config, const NeckSizes& sizes,
                        NeckId neck, int r);

}  // namespace maxface
