#include "maxface/delaunay.hpp"

#include <algorithm>
#include <cmath>

#include "maxface/error.hpp"

namespace maxface {

namespace {

using P = std::array<double, 2>;

long double orient(const P& a, const P& b, const P& c) {
  return (static_cast<long double>(b[0]) - a[0]) * (static_cast<long double>(c[1]) - a[1]) -
         (static_cast<long double>(b[1]) - a[1]) * (static_cast<long double>(c[0]) - a[0]);
}

// > 0 when d is inside the circumcircle of ccw (a, b, c)
long double incircle(const P& a, const P& b, const P& c, const P& d) {
  long double adx = a[0] - static_cast<long double>(d[0]), ady = a[1] - static_cast<long double>(d[1]);
  long double bdx = b[0] - static_cast<long double>(d[0]), bdy = b[1] - static_cast<long double>(d[1]);
  long double cdx = c[0] - static_cast<long double>(d[0]), cdy = c[1] - static_cast<long double>(d[1]);
  long double ad = adx * adx + ady * ady, bd = bdx * bdx + bdy * bdy, cd = cdx * cdx + cdy * cdy;
  return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
}

struct Tri {
  int v[3];
  int n[3];  // neighbour across the edge opposite v[i]
  bool dead = false;
};

}  // namespace

std::vector<std::array<int, 3>> delaunay(const std::vector<P>& input) {
  const int n = static_cast<int>(input.size());
  if (n < 3) return {};
  std::vector<P> pts = input;
  double lo[2] = {pts[0][0], pts[0][1]}, hi[2] = {lo[0], lo[1]};
  for (const auto& p : pts)
    for (int k = 0; k < 2; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  double span = std::max({hi[0] - lo[0], hi[1] - lo[1], 1e-300});
  double cx = 0.5 * (lo[0] + hi[0]), cy = 0.5 * (lo[1] + hi[1]);
  double big = 1e3 * span;
  pts.push_back({cx - big, cy - big});
  pts.push_back({cx + big, cy - big});
  pts.push_back({cx, cy + big});

  std::vector<Tri> tris;
  tris.reserve(8 * n);
  tris.push_back({{n, n + 1, n + 2}, {-1, -1, -1}});
  int last = 0;

  auto locate = [&](const P& p) {
    int t = last;
    if (tris[t].dead) t = static_cast<int>(tris.size()) - 1;
    for (int steps = 0; steps < 4 * n + 100; ++steps) {
      const Tri& tr = tris[t];
      int next = -1;
      for (int i = 0; i < 3; ++i)
        if (orient(pts[tr.v[(i + 1) % 3]], pts[tr.v[(i + 2) % 3]], p) < 0) {
          next = tr.n[i];
          break;
        }
      if (next < 0) return t;
      t = next;
    }
    for (int k = static_cast<int>(tris.size()) - 1; k >= 0; --k) {
      if (tris[k].dead) continue;
      const Tri& tr = tris[k];
      if (orient(pts[tr.v[0]], pts[tr.v[1]], p) >= 0 && orient(pts[tr.v[1]], pts[tr.v[2]], p) >= 0 &&
          orient(pts[tr.v[2]], pts[tr.v[0]], p) >= 0)
        return k;
    }
    throw Error(ErrorKind::MeshFailure, "point location failed");
  };

  std::vector<int> bad, stack, mark(tris.capacity(), 0);
  int stamp = 0;
  struct Edge {
    int a, b, outside, from;
  };
  std::vector<Edge> boundary;
  for (int pi = 0; pi < n; ++pi) {
    const P& p = pts[pi];
    int t0 = locate(p);
    for (int k = 0; k < 3; ++k)
      if (pts[tris[t0].v[k]] == p) throw Error(ErrorKind::MeshFailure, "coincident points");
    ++stamp;
    if (mark.size() < tris.size() + 8) mark.resize(2 * tris.size() + 8, 0);
    bad.assign(1, t0);
    stack.assign(1, t0);
    mark[t0] = stamp;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int i = 0; i < 3; ++i) {
        int nb = tris[t].n[i];
        if (nb < 0 || mark[nb] == stamp || mark[nb] == -stamp) continue;
        const Tri& o = tris[nb];
        if (incircle(pts[o.v[0]], pts[o.v[1]], pts[o.v[2]], p) > 0) {
          mark[nb] = stamp;
          bad.push_back(nb);
          stack.push_back(nb);
        } else {
          mark[nb] = -stamp;
        }
      }
    }
    boundary.clear();
    for (int t : bad)
      for (int i = 0; i < 3; ++i) {
        int nb = tris[t].n[i];
        if (nb < 0 || mark[nb] != stamp) boundary.push_back({tris[t].v[(i + 1) % 3], tris[t].v[(i + 2) % 3], nb, t});
      }
    for (int t : bad) tris[t].dead = true;
    int first = static_cast<int>(tris.size());
    for (const Edge& e : boundary) {
      int id = static_cast<int>(tris.size());
      tris.push_back({{e.a, e.b, pi}, {-1, -1, e.outside}});
      if (e.outside >= 0)
        for (int k = 0; k < 3; ++k)
          if (tris[e.outside].n[k] == e.from) tris[e.outside].n[k] = id;
    }
    // stitch the fan: edge (b, p) of (a, b, p) meets edge (p, b) of (b, c, p)
    int count = static_cast<int>(tris.size()) - first;
    for (int x = first; x < first + count; ++x)
      for (int y = first; y < first + count; ++y) {
        if (x == y) continue;
        if (tris[x].v[1] == tris[y].v[0]) {
          tris[x].n[0] = y;
          tris[y].n[1] = x;
        }
      }
    last = first;
    if (mark.size() < tris.size()) mark.resize(2 * tris.size(), 0);
  }

  std::vector<std::array<int, 3>> out;
  for (const Tri& t : tris) {
    if (t.dead || t.v[0] >= n || t.v[1] >= n || t.v[2] >= n) continue;
    out.push_back({t.v[0], t.v[1], t.v[2]});
  }
  return out;
}

}  // namespace maxface
