#include "maxface/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <queue>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

#include "maxface/delaunay.hpp"

namespace maxface {

namespace {

constexpr double kPi = std::numbers::pi;

// Triangles are tagged with the chart their edges are integrated in.
struct FaceChart {
  Chart chart = Chart::Plane;
  int plane = 1;
  NeckId neck;
};

struct Builder {
  const SurfaceAtlas& atlas;
  const SurfaceModel& model;
  int N;
  double R_out;
  MeshE31 mesh;
  std::vector<FaceChart> face_chart;

  Builder(const SurfaceAtlas& a, int n, double r) : atlas(a), model(a.model()), N(n), R_out(r) {}

  int add(const VertexSource& s) {
    mesh.sources.push_back(s);
    mesh.flags.push_back(SingClass::Regular);
    return static_cast<int>(mesh.sources.size()) - 1;
  }

  void add_face(int a, int b, int c, FaceChart fc) {
    mesh.faces.push_back({a, b, c});
    face_chart.push_back(fc);
  }

  Complex coord(int v, const FaceChart& fc) const {
    const auto& s = mesh.sources[v];
    if (fc.chart == Chart::Plane) return s.z;
    return fc.chart == Chart::Lower ? s.v : s.w;
  }

  double angle(int j, bool half) const { return 2 * kPi * j / N + (half ? kPi / N : 0.0); }

  // ring0[node] vertex ids on every plane
  std::map<std::pair<NeckId, bool>, std::vector<int>> ring0;

  Complex chart_z(NeckId n, bool upper, Complex u, Complex guess) const {
    return model.z_of_chart(n, upper, u, guess);
  }

  void build_ring0() {
    const double eps = atlas.epsilon();
    for (NeckId n : model.params().necks())
      for (bool upper : {false, true}) {
        const NodeDisk& d = atlas.disk(n, upper);
        int plane = model.plane_of(n, upper);
        std::vector<int> ids;
        Complex z = d.gate;
        for (int j = 0; j < N; ++j) {
          double a = angle(j, false);
          Complex u = std::polar(eps, upper ? -a : a);
          z = chart_z(n, upper, u, z);
          VertexSource s;
          s.plane = n.level;
          s.neck = n;
          s.has_z = true;
          s.z = z;
          (upper ? s.has_w : s.has_v) = true;
          (upper ? s.w : s.v) = u;
          ids.push_back(add(s));
          (void)plane;
        }
        ring0[{n, upper}] = ids;
      }
  }

  // Log-radial x angular grid from ring0 of the lower node to ring0 of the upper node.
  void build_annulus(NeckId n, const std::map<NeckId, std::vector<double>>& markers) {
    const double eps = atlas.epsilon(), t = atlas.t();
    const double step = 0.866 * 2 * kPi / N;
    int K = std::max(2, static_cast<int>(std::ceil(std::log(eps / t) / step)));
    if (K % 2) ++K;
    std::vector<std::vector<int>> rings(2 * K + 1);
    rings[0] = ring0[{n, false}];
    rings[2 * K] = ring0[{n, true}];
    for (int k = 1; k < 2 * K; ++k) {
      bool half = k % 2 == 1;
      for (int j = 0; j < N; ++j) {
        double a = angle(j, half);
        VertexSource s;
        s.plane = n.level;
        s.neck = n;
        if (k <= K) {
          s.has_v = true;
          s.v = std::polar(eps * std::pow(t / eps, static_cast<double>(k) / K), a);
        }
        if (k >= K) {
          s.has_w = true;
          s.w = std::polar(eps * std::pow(t / eps, static_cast<double>(2 * K - k) / K), -a);
        }
        rings[k].push_back(add(s));
      }
    }
    for (int id : rings[K]) mesh.flags[id] = SingClass::SingularCurve;
    auto it = markers.find(n);
    if (it != markers.end())
      for (double theta : it->second) {
        double x = theta / (2 * kPi) * N;
        int j = static_cast<int>(std::lround(x - N * std::floor(x / N))) % N;
        mesh.flags[rings[K][j]] = SingClass::Swallowtail;
      }
    for (int k = 0; k < 2 * K; ++k) {
      FaceChart fc{k < K ? Chart::Lower : Chart::Upper, n.level, n};
      const auto& A = rings[k];
      const auto& B = rings[k + 1];
      bool b_ahead = k % 2 == 0;  // ring k+1 is shifted by +pi/N
      for (int j = 0; j < N; ++j) {
        int j1 = (j + 1) % N;
        if (b_ahead) {
          add_face(A[j], A[j1], B[j], fc);
          add_face(B[j], A[j1], B[j1], fc);
        } else {
          add_face(A[j], A[j1], B[j1], fc);
          add_face(B[j], A[j], B[j1], fc);
        }
      }
    }
  }

  void build_plane(int l) {
    const auto& disks = atlas.disks(l);
    const double step = 0.866 * 2 * kPi / N;
    const double kappa = 1 + step;
    const double eps = atlas.epsilon();
    Complex c = atlas.center(l);
    std::vector<int> ids;        // vertices triangulated on this plane
    std::vector<int> ring_owner; // node index for ring0 vertices, -1 otherwise
    std::vector<double> extent(disks.size(), 0.0);
    std::vector<double> spacing;
    for (std::size_t i = 0; i < disks.size(); ++i) {
      const NodeDisk& d = disks[i];
      const PlaneData& pd = model.plane(l);
      double limit = std::min(0.45 * pd.separation(static_cast<int>(i)), 0.95 * R_out - std::abs(d.x - c));
      const auto& r0 = ring0[{d.ref.neck, d.ref.upper}];
      for (int id : r0) {
        ids.push_back(id);
        ring_owner.push_back(static_cast<int>(i));
      }
      // staggered copy of ring0 as the template for odd rings
      std::vector<Complex> base_even, base_odd;
      Complex z = mesh.sources[r0[0]].z;
      for (int j = 0; j < N; ++j) {
        base_even.push_back(mesh.sources[r0[j]].z);
        double a = angle(j, true);
        z = chart_z(d.ref.neck, d.ref.upper, std::polar(eps, d.ref.upper ? -a : a), z);
        base_odd.push_back(z);
      }
      double r_in = 0.0;
      for (Complex b : base_even) r_in = std::max(r_in, std::abs(b - d.x));
      extent[i] = r_in;
      for (int m = 1;; ++m) {
        double f = std::pow(kappa, m);
        if (f * r_in > limit) break;
        const auto& base = m % 2 ? base_odd : base_even;
        for (int j = 0; j < N; ++j) {
          VertexSource s;
          s.plane = l;
          s.has_z = true;
          s.z = d.x + f * (base[j] - d.x);
          ids.push_back(add(s));
          ring_owner.push_back(-1);
        }
        extent[i] = f * r_in;
      }
      spacing.push_back(2 * kPi * extent[i] / N);
    }
    // background lattice between the node rings, then polar far field
    double R_in = 0.0;
    for (std::size_t i = 0; i < disks.size(); ++i) R_in = std::max(R_in, std::abs(disks[i].x - c) + extent[i]);
    std::sort(spacing.begin(), spacing.end());
    double h = spacing.empty() ? R_out / N : spacing[spacing.size() / 2];
    bool lone = disks.size() == 1;  // rings of the only node run out to the end
    if (!lone) {
      R_in += h;
      // dh/g is singular at zeros of g wherever the divisors do not match exactly
      auto free_of_rings = [&](Complex z) {
        for (std::size_t i = 0; i < disks.size(); ++i)
          if (std::abs(z - disks[i].x) < extent[i] + 0.75 * h) return false;
        for (Complex zeta : atlas.gauss_zeros(l))
          if (std::abs(z - zeta) < 0.5 * h) return false;
        return true;
      };
      int rows = static_cast<int>(std::ceil(R_in / (h * 0.866)));
      for (int r = -rows; r <= rows; ++r)
        for (int q = -rows - 1; q <= rows + 1; ++q) {
          Complex z = c + Complex(h * (q + 0.5 * (r & 1)), h * 0.866 * r);
          if (std::abs(z - c) > R_in - 0.5 * h || !free_of_rings(z)) continue;
          VertexSource s;
          s.plane = l;
          s.has_z = true;
          s.z = z;
          ids.push_back(add(s));
          ring_owner.push_back(-1);
        }
      int Nf = std::clamp(static_cast<int>(std::ceil(2 * kPi * R_in / h)), N, 4 * N);
      double kf = 1 + 0.866 * 2 * kPi / Nf;
      double R = R_in;
      for (int k = 0;; ++k) {
        bool last = R >= R_out;
        if (last) R = R_out;
        for (int j = 0; j < Nf; ++j) {
          VertexSource s;
          s.plane = l;
          s.has_z = true;
          s.z = c + std::polar(R, 2 * kPi * j / Nf + (k % 2 ? kPi / Nf : 0.0));
          ids.push_back(add(s));
          ring_owner.push_back(-1);
        }
        if (last) break;
        R *= kf;
        if (R > R_out && R < R_out * (1 + 0.3 * (kf - 1))) R = R_out;
      }
    }
    // triangulate with a tiny deterministic jitter against cocircular rings
    std::mt19937 rng(1000 + l);
    std::uniform_real_distribution<double> jit(-1.0, 1.0);
    std::vector<std::array<double, 2>> pts;
    double scale = std::max(1.0, R_out);
    for (int id : ids) {
      Complex z = mesh.sources[id].z;
      pts.push_back({z.real() + 1e-11 * scale * jit(rng), z.imag() + 1e-11 * scale * jit(rng)});
    }
    auto tris = delaunay(pts);
    std::set<std::pair<int, int>> ring_edges;
    for (const auto& tr : tris) {
      int o = ring_owner[tr[0]];
      if (o >= 0 && ring_owner[tr[1]] == o && ring_owner[tr[2]] == o) continue;  // inside a hole
      add_face(ids[tr[0]], ids[tr[1]], ids[tr[2]], {Chart::Plane, l, {}});
      for (int k = 0; k < 3; ++k) {
        int a = ids[tr[k]], b = ids[tr[(k + 1) % 3]];
        ring_edges.insert({std::min(a, b), std::max(a, b)});
      }
    }
    for (const auto& d : disks) {
      const auto& r0 = ring0[{d.ref.neck, d.ref.upper}];
      for (int j = 0; j < N; ++j) {
        int a = r0[j], b = r0[(j + 1) % N];
        if (!ring_edges.count({std::min(a, b), std::max(a, b)}))
          throw Error(ErrorKind::MeshFailure,
                      "node ring is not a triangulation edge on plane " + std::to_string(l));
      }
    }
  }

  void orient_faces() {
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
      auto& tr = mesh.faces[f];
      Complex a = coord(tr[0], face_chart[f]), b = coord(tr[1], face_chart[f]), c = coord(tr[2], face_chart[f]);
      if (std::imag(std::conj(b - a) * (c - a)) < 0) std::swap(tr[1], tr[2]);
    }
  }
};

struct EdgeJob {
  int a, b;
  FaceChart chart;
  bool waist = false;
  FaceChart other;
};

std::array<double, 3> edge_integral(const SurfaceAtlas& atlas, const Builder& B, int a, int b,
                                    const FaceChart& fc) {
  Complex p0 = B.coord(a, fc), p1 = B.coord(b, fc);
  PathPiece piece = PathPiece::line(fc.chart, fc.chart == Chart::Upper ? fc.plane + 1 : fc.plane, fc.neck, p0, p1);
  return atlas.integrate(piece).position();
}

}  // namespace

int MeshE31::edge_count() const {
  std::set<std::pair<int, int>> e;
  for (const auto& f : faces)
    for (int k = 0; k < 3; ++k) e.insert({std::min(f[k], f[(k + 1) % 3]), std::max(f[k], f[(k + 1) % 3])});
  return static_cast<int>(e.size());
}

int MeshE31::euler_characteristic() const {
  return static_cast<int>(vertices.size()) - edge_count() + static_cast<int>(faces.size());
}

int MeshE31::boundary_loops() const {
  std::map<std::pair<int, int>, int> use;
  for (const auto& f : faces)
    for (int k = 0; k < 3; ++k) ++use[{std::min(f[k], f[(k + 1) % 3]), std::max(f[k], f[(k + 1) % 3])}];
  std::unordered_map<int, std::vector<int>> adj;
  for (const auto& [e, n] : use)
    if (n == 1) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
  std::set<int> seen;
  int loops = 0;
  for (const auto& [v, nb] : adj) {
    if (seen.count(v)) continue;
    ++loops;
    std::vector<int> st{v};
    seen.insert(v);
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : adj[x])
        if (seen.insert(y).second) st.push_back(y);
    }
  }
  return loops;
}

int MeshE31::count(SingClass c) const {
  return static_cast<int>(std::count(flags.begin(), flags.end(), c));
}

int mesh_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MAXFACE_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

MeshE31 build_mesh(const SurfaceAtlas& atlas, const MeshOptions& options) {
  if (options.resolution < 8) throw Error(ErrorKind::MeshFailure, "resolution must be at least 8");
  double pmax = 0.0;
  for (const auto& lev : atlas.model().params().a)
    for (Complex a : lev) pmax = std::max(pmax, std::abs(a));
  double R_out = options.outer_radius > 0 ? options.outer_radius : 20.0 * std::max(1.0, pmax);
  for (int l = 1; l <= atlas.plane_count(); ++l)
    for (const auto& d : atlas.disks(l))
      if (std::abs(d.x - atlas.center(l)) + d.port_radius >= 0.9 * R_out)
        throw Error(ErrorKind::MeshFailure, "outer radius does not clear the necks");

  Builder B(atlas, options.resolution, R_out);
  B.build_ring0();
  for (NeckId n : atlas.model().params().necks()) B.build_annulus(n, options.swallowtail_angles);
  for (int l = 1; l <= atlas.plane_count(); ++l) B.build_plane(l);
  B.orient_faces();

  // unique edges, charted by their first face; waist edges get both charts
  const auto& flags = B.mesh.flags;
  std::map<std::pair<int, int>, int> index;
  std::vector<EdgeJob> jobs;
  for (std::size_t f = 0; f < B.mesh.faces.size(); ++f)
    for (int k = 0; k < 3; ++k) {
      int a = B.mesh.faces[f][k], b = B.mesh.faces[f][(k + 1) % 3];
      auto key = std::make_pair(std::min(a, b), std::max(a, b));
      auto it = index.find(key);
      if (it == index.end()) {
        index[key] = static_cast<int>(jobs.size());
        jobs.push_back({key.first, key.second, B.face_chart[f], false, {}});
      } else {
        EdgeJob& j = jobs[it->second];
        bool on_waist = flags[key.first] != SingClass::Regular && flags[key.second] != SingClass::Regular;
        if (on_waist && j.chart.chart != B.face_chart[f].chart) {
          j.waist = true;
          j.other = B.face_chart[f];
        }
      }
    }

  std::vector<std::array<double, 3>> incr(jobs.size()), incr_other(jobs.size());
  const int T = std::min<int>(mesh_threads(options.threads), static_cast<int>(jobs.size()));
  std::vector<std::exception_ptr> errors(T);
  auto work = [&](int w) {
    try {
      for (std::size_t i = w; i < jobs.size(); i += T) {
        incr[i] = edge_integral(atlas, B, jobs[i].a, jobs[i].b, jobs[i].chart);
        if (jobs[i].waist) incr_other[i] = edge_integral(atlas, B, jobs[i].a, jobs[i].b, jobs[i].other);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (T <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < T; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  // spanning tree from the first plane-1 vertex that has a plane coordinate
  const int V = static_cast<int>(B.mesh.sources.size());
  std::vector<std::vector<std::pair<int, int>>> adj(V);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    adj[jobs[i].a].push_back({jobs[i].b, static_cast<int>(i)});
    adj[jobs[i].b].push_back({jobs[i].a, static_cast<int>(i)});
  }
  int root = -1;
  for (int v = 0; v < V && root < 0; ++v)
    if (B.mesh.sources[v].has_z && B.mesh.sources[v].plane == 1 && !B.mesh.sources[v].has_v &&
        !B.mesh.sources[v].has_w)
      root = v;
  if (root < 0) throw Error(ErrorKind::MeshFailure, "no root vertex");
  std::vector<std::array<double, 3>> X(V);
  std::vector<char> done(V, 0);
  X[root] = immerse(atlas, ChartPoint::on_plane(1, B.mesh.sources[root].z));
  done[root] = 1;
  std::queue<int> q;
  q.push(root);
  std::vector<char> tree(jobs.size(), 0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [w, e] : adj[u]) {
      if (done[w]) continue;
      double s = jobs[e].a == u ? 1.0 : -1.0;
      for (int k = 0; k < 3; ++k) X[w][k] = X[u][k] + s * incr[e][k];
      done[w] = 1;
      tree[e] = 1;
      q.push(w);
    }
  }
  for (int v = 0; v < V; ++v)
    if (!done[v]) throw Error(ErrorKind::MeshFailure, "mesh is not connected");

  MeshE31 mesh = std::move(B.mesh);
  mesh.vertices = X;
  double lo[3], hi[3];
  for (int k = 0; k < 3; ++k) lo[k] = hi[k] = X[0][k];
  for (const auto& x : X)
    for (int k = 0; k < 3; ++k) {
      lo[k] = std::min(lo[k], x[k]);
      hi[k] = std::max(hi[k], x[k]);
    }
  mesh.diameter = std::sqrt((hi[0] - lo[0]) * (hi[0] - lo[0]) + (hi[1] - lo[1]) * (hi[1] - lo[1]) +
                            (hi[2] - lo[2]) * (hi[2] - lo[2]));
  auto dist = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])});
  };
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (jobs[i].waist) mesh.seam_mismatch = std::max(mesh.seam_mismatch, dist(incr[i], incr_other[i]));
    if (!tree[i]) {
      std::array<double, 3> d{X[jobs[i].b][0] - X[jobs[i].a][0], X[jobs[i].b][1] - X[jobs[i].a][1],
                              X[jobs[i].b][2] - X[jobs[i].a][2]};
      mesh.closure_defect = std::max(mesh.closure_defect, dist(d, incr[i]));
    }
  }
  double gamma = 0.0;
  for (const auto& c : homology_basis(atlas.model().params()))
    if (c.kind == CycleId::Kind::Gamma) gamma = std::max(gamma, std::abs(period_defect(atlas, c).horizontal));
  mesh.seam_tolerance = options.seam_tolerance * mesh.diameter + 10.0 * gamma;
  if (mesh.seam_mismatch > mesh.seam_tolerance)
    throw Error(ErrorKind::SeamMismatch, "charts disagree across a waist", mesh.seam_mismatch);
  return mesh;
}

}  // namespace maxface
