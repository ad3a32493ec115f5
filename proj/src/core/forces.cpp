#include "maxface/forces.hpp"

#include <algorithm>
#include <cmath>

#include "maxface/laurent.hpp"

namespace maxface {

Complex force(const Configuration& config, const NeckSizes& sizes, NeckId neck) {
  const int l = neck.level;
  const Complex pk = config.position(neck);
  const double cl = sizes.at(l);
  Complex f = 0.0;
  const auto& same = config.positions(l);
  for (int i = 0; i < static_cast<int>(same.size()); ++i)
    if (i != neck.index - 1) f += 2.0 * cl * cl / (pk - same[i]);
  for (Complex q : config.positions(l + 1)) f -= cl * sizes.at(l + 1) / (pk - q);
  for (Complex q : config.positions(l - 1)) f -= cl * sizes.at(l - 1) / (pk - q);
  return f;
}

Complex force_via_residue(const Configuration& config, const NeckSizes& sizes,
                          NeckId neck) {
  const Complex p = config.position(neck);
  const auto lower = level_form(config, sizes, neck.level);
  const auto upper = level_form(config, sizes, neck.level + 1);
  return 0.5 * (residue_power(lower, p, 2) + residue_power(upper, p, 2));
}

std::vector<Complex> all_forces(const Configuration& config, const NeckSizes& sizes) {
  std::vector<Complex> out;
  for (NeckId n : config.necks()) out.push_back(force(config, sizes, n));
  return out;
}

double max_force(const Configuration& config, const NeckSizes& sizes) {
  double m = 0.0;
  for (Complex f : all_forces(config, sizes)) m = std::max(m, std::abs(f));
  return m;
}

ScalarW scalar_W(const Configuration& config, const NeckSizes& sizes) {
  ScalarW w{0.0, 0.0};
  for (NeckId n : config.necks()) w.sum_form += config.position(n) * force(config, sizes, n);
  for (int l = 1; l < config.plane_count(); ++l) {
    const double nl = config.necks_at(l), cl = sizes.at(l);
    w.closed_form += nl * (nl - 1) * cl * cl;
    w.closed_form -= nl * config.necks_at(l + 1) * cl * sizes.at(l + 1);
  }
  return w;
}

namespace {

std::size_t find_pole(const LevelForm& form, Complex p) {
  for (std::size_t i = 0; i < form.poles.size(); ++i)
    if (std::abs(form.poles[i].position - p) <= 1e-12 * std::max(1.0, std::abs(p))) return i;
  throw Error(ErrorKind::NotAPole, "position is not a pole of the form");
}

}  // namespace

Complex residue_power(const LevelForm& form, Complex pole_position, int power) {
  const std::size_t i = find_pole(form, pole_position);
  std::vector<Complex> x, res;
  for (const auto& p : form.poles) {
    x.push_back(p.position);
    res.push_back(p.residue);
  }
  auto h = laurent::regular_part(x, res, i, power);
  return laurent::residue_of_power(res[i], h, power);
}

double residue_power_magnitude(const LevelForm& form, Complex pole_position, int power) {
  const std::size_t i = find_pole(form, pole_position);
  const Complex x = form.poles[i].position;
  laurent::Series h(power, 0.0);
  for (std::size_t j = 0; j < form.poles.size(); ++j) {
    if (j == i) continue;
    const double inv = 1.0 / std::abs(form.poles[j].position - x);
    double term = std::abs(form.poles[j].residue) * inv;
    for (int s = 0; s < power; ++s) {
      h[s] += term;
      term *= inv;
    }
  }
  return std::abs(laurent::residue_of_power(std::abs(form.poles[i].residue), h, power));
}

TrigPolynomial R_function(const Configuration& config, const NeckSizes& sizes,
                          NeckId neck, int r) {
  const Complex p = config.position(neck);
  const Complex lower = residue_power(level_form(config, sizes, neck.level), p, r + 2);
  const Complex upper = residue_power(level_form(config, sizes, neck.level + 1), p, r + 2);
  // odd l:  Im(e^{i(r+1)t} conj(lower) - e^{-i(r+1)t} upper)
  // even l: Im(e^{i(r+1)t} lower - e^{-i(r+1)t} conj(upper))
  // Folding the negative frequency: -Im(e^{-ikt} B) = Im(conj(B) e^{ikt}).
  Complex amp = (neck.level % 2 == 1) ? std::conj(lower) + std::conj(upper) : lower + upper;
  return TrigPolynomial({{r + 1, amp}});
}

double R_function_scale(const Configuration& config, const NeckSizes& sizes,
                        NeckId neck, int r) {
  const Complex p = config.position(neck);
  return residue_power_magnitude(level_form(config, sizes, neck.level), p, r + 2) +
         residue_power_magnitude(level_form(config, sizes, neck.level + 1), p, r + 2);
}

}  // namespace maxface
