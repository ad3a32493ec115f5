#include <algorithm>
#include <cmath>

#include "maxface/balance.hpp"

namespace maxface {

const char* to_string(EndType type) {
  return type == EndType::Planar ? "planar" : "catenoid";
}

TopologyReport topology(const Configuration& config, const NeckSizes&) {
  TopologyReport rep;
  const int L = config.plane_count();
  rep.genus = config.total_necks() - L + 1;
  rep.end_count = L;
  rep.embeddable = true;
  double scale = 0.0;
  for (double q : config.growths()) scale = std::max(scale, std::abs(q));
  for (int l = 1; l <= L; ++l) {
    const bool flat = std::abs(config.growth(l)) <= 1e-12 * scale;
    rep.end_types.push_back(flat ? EndType::Planar : EndType::Catenoid);
    if (l > 1 && !(config.growth(l - 1) < config.growth(l))) rep.embeddable = false;
  }
  return rep;
}

}  // namespace maxface
