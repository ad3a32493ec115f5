#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxface/atlas.hpp"

namespace maxface {

enum class SingClass { Regular = 0, SingularCurve = 1, Swallowtail = 2 };

// Where a vertex came from. Ring vertices of a node carry both their plane
// coordinate and their chart coordinate; waist vertices carry v and w.
struct VertexSource {
  int plane = 1;          // plane of z, or the lower plane for neck vertices
  NeckId neck;
  bool has_z = false, has_v = false, has_w = false;
  Complex z, v, w;
};

struct MeshOptions {
  int resolution = 64;          // angular count around nodes and annuli
  double outer_radius = 0.0;    // <= 0: 20 * max(1, max |p|)
  std::map<NeckId, std::vector<double>> swallowtail_angles;  // waist angles theta of v = t e^{i theta}
  int threads = 0;              // 0: MAXFACE_THREADS or hardware
  double seam_tolerance = 1e-6; // relative to the mesh diameter, on top of 10x the gamma defects
};

struct MeshE31 {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<SingClass> flags;
  std::vector<VertexSource> sources;

  double diameter = 0.0;
  double seam_mismatch = 0.0;    // max waist edge disagreement between the two charts
  double closure_defect = 0.0;   // max disagreement on edges outside the spanning tree
  double seam_tolerance = 0.0;   // absolute threshold that was applied

  int edge_count() const;
  int euler_characteristic() const;
  int boundary_loops() const;
  int count(SingClass c) const;
};

int mesh_threads(int requested);

// Throws SeamMismatch, MeshFailure.
MeshE31 build_mesh(const SurfaceAtlas& atlas, const MeshOptions& options = {});

// x1 x2 x3 vertices, 1-based faces.
void write_obj(const MeshE31& mesh, const std::string& path, const nlohmann::json& manifest = {});
void write_obj(const MeshE31& mesh, std::ostream& out, const nlohmann::json& manifest = {});
// Non-regular flags keyed by vertex index (0-based), plus the manifest.
nlohmann::json flags_json(const MeshE31& mesh, const nlohmann::json& manifest = {});
// ASCII PLY with per-vertex int property sing_class.
void write_ply(const MeshE31& mesh, const std::string& path, const nlohmann::json& manifest = {});
void write_ply(const MeshE31& mesh, std::ostream& out, const nlohmann::json& manifest = {});

}  // namespace maxface
