#pragma once

#include <array>
#include <vector>

namespace maxface {

// Bowyer-Watson. Returns counter-clockwise triangles covering the convex hull.
// Callers jitter cocircular inputs; coincident points throw MeshFailure.
std::vector<std::array<int, 3>> delaunay(const std::vector<std::array<double, 2>>& points);

}  // namespace maxface
