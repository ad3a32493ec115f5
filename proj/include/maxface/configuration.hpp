#pragma once

#include <complex>
#include <compare>
#include <vector>

#include "maxface/error.hpp"

namespace maxface {

using Complex = std::complex<double>;

// Neck (l,k): level l in [1, L-1], index k in [1, n_l]. One-based like the math.
struct NeckId {
  int level = 1;
  int index = 1;
  auto operator<=>(const NeckId&) const = default;
};

// Limit neck positions p[l][k] plus logarithmic end growths Q_1..Q_L.
// Positions are stored per level, level 1 first.
class Configuration {
 public:
  Configuration(std::vector<std::vector<Complex>> positions,
                std::vector<double> growths);

  int plane_count() const { return static_cast<int>(growths_.size()); }
  int level_count() const { return plane_count() - 1; }
  // n_l, with n_0 = n_L = 0.
  int necks_at(int level) const;
  int total_necks() const { return total_; }

  const std::vector<Complex>& positions(int level) const;
  const std::vector<std::vector<Complex>>& all_positions() const { return positions_; }
  Complex position(NeckId neck) const;

  double growth(int plane) const;
  const std::vector<double>& growths() const { return growths_; }

  bool contains(NeckId neck) const;
  std::vector<NeckId> necks() const;
  // Level-major position of a neck in necks().
  int flat_index(NeckId neck) const;

  Configuration with_positions(std::vector<std::vector<Complex>> positions) const;
  Configuration translated(Complex shift) const;
  Configuration scaled(Complex factor) const;

 private:
  std::vector<std::vector<Complex>> positions_;
  std::vector<double> growths_;
  std::vector<int> offsets_;
  int total_ = 0;
};

// c_1..c_{L-1}; at() returns 0 for the boundary levels 0 and L.
struct NeckSizes {
  std::vector<double> c;
  double at(int level) const;
};

NeckSizes neck_sizes(const Configuration& config);

struct Pole {
  Complex position;
  double residue;
};

// omega_l / dz as a sum of simple poles.
struct LevelForm {
  std::vector<Pole> poles;
  Complex value(Complex z) const;
};

LevelForm level_form(const Configuration& config, const NeckSizes& sizes, int plane);

}  // namespace maxface
