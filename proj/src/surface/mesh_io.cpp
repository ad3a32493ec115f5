#include <cstdio>
#include <fstream>
#include <iomanip>

#include "maxface/mesh.hpp"

namespace maxface {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::MeshFailure, "cannot write " + path);
  out << std::setprecision(17);
  return out;
}

}  // namespace

void write_obj(const MeshE31& mesh, std::ostream& out, const nlohmann::json& manifest) {
  out << std::setprecision(17);
  if (!manifest.is_null()) out << "# manifest " << manifest.dump() << "\n";
  for (const auto& v : mesh.vertices) out << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << "\n";
  for (const auto& f : mesh.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << "\n";
}

nlohmann::json flags_json(const MeshE31& mesh, const nlohmann::json& manifest) {
  nlohmann::json flags = nlohmann::json::object();
  for (std::size_t i = 0; i < mesh.flags.size(); ++i)
    if (mesh.flags[i] != SingClass::Regular) flags[std::to_string(i)] = static_cast<int>(mesh.flags[i]);
  nlohmann::json j;
  j["manifest"] = manifest;
  j["flags"] = flags;
  j["legend"] = {{"0", "regular"}, {"1", "singular-curve"}, {"2", "swallowtail"}};
  return j;
}

void write_ply(const MeshE31& mesh, std::ostream& out, const nlohmann::json& manifest) {
  out << std::setprecision(17);
  out << "ply\nformat ascii 1.0\n";
  if (!manifest.is_null()) out << "comment manifest " << manifest.dump() << "\n";
  out << "element vertex " << mesh.vertices.size() << "\n"
      << "property double x\nproperty double y\nproperty double z\nproperty int sing_class\n"
      << "element face " << mesh.faces.size() << "\n"
      << "property list uchar int vertex_indices\nend_header\n";
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const auto& v = mesh.vertices[i];
    out << v[0] << ' ' << v[1] << ' ' << v[2] << ' ' << static_cast<int>(mesh.flags[i]) << "\n";
  }
  for (const auto& f : mesh.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << "\n";
}

void write_obj(const MeshE31& mesh, const std::string& path, const nlohmann::json& manifest) {
  auto out = open_out(path);
  write_obj(mesh, out, manifest);
}

void write_ply(const MeshE31& mesh, const std::string& path, const nlohmann::json& manifest) {
  auto out = open_out(path);
  write_ply(mesh, out, manifest);
}

}  // namespace maxface
