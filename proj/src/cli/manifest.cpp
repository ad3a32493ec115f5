#include <array>
#include <cmath>
#include <utility>

#include "maxface/cli.hpp"

namespace maxface::cli {

namespace {

constexpr std::array<std::pair<Command, const char*>, 10> kNames{{
    {Command::Balance, "balance"},
    {Command::Rigidity, "rigidity"},
    {Command::Predict, "predict"},
    {Command::Classify, "classify"},
    {Command::Mesh, "mesh"},
    {Command::Defects, "defects"},
    {Command::Identities, "identities"},
    {Command::Preset, "preset"},
    {Command::Validate, "validate"},
    {Command::Table, "table"},
}};

bool needs_input(Command c) {
  return c != Command::Identities && c != Command::Preset;
}

bool needs_t(Command c) {
  return c == Command::Classify || c == Command::Mesh || c == Command::Defects;
}

}  // namespace

const char* to_string(Command c) {
  for (const auto& [k, name] : kNames)
    if (k == c) return name;
  return "?";
}

std::optional<Command> command_from_string(const std::string& s) {
  for (const auto& [k, name] : kNames)
    if (s == name) return k;
  return std::nullopt;
}

nlohmann::json to_json(const RunManifest& m) {
  nlohmann::json j;
  j["command"] = to_string(m.command);
  j["input"] = m.input_path;
  j["out"] = m.output_dir;
  j["t"] = m.t ? nlohmann::json(*m.t) : nlohmann::json(nullptr);
  j["resolution"] = m.resolution ? nlohmann::json(*m.resolution) : nlohmann::json(nullptr);
  j["seed"] = m.seed ? nlohmann::json(*m.seed) : nlohmann::json(nullptr);
  if (m.command == Command::Preset) {
    j["preset"] = m.preset;
    j["m"] = m.m;
    j["L"] = m.L;
  }
  if (m.command == Command::Identities) j["m"] = m.m;
  if (m.command == Command::Balance) {
    j["perturb"] = m.perturb;
    j["max_iter"] = m.max_iter;
  }
  if (m.command == Command::Mesh) j["refine"] = m.refine;
  if (m.command == Command::Classify) j["samples"] = m.samples;
  j["tol_force"] = m.tol_force;
  j["tol_period"] = m.tol_period;
  return j;
}

std::vector<std::string> manifest_problems(const RunManifest& m) {
  std::vector<std::string> out;
  if (needs_input(m.command) && m.input_path.empty()) out.push_back("--input is required");
  if (needs_t(m.command) && !m.t) out.push_back("--t is required");
  if (m.t && !(*m.t > 0.0 && *m.t < 1.0)) out.push_back("--t must lie in (0, 1)");
  if (m.resolution && *m.resolution < 8) out.push_back("--resolution must be at least 8");
  if (m.command == Command::Mesh && m.output_dir.empty()) out.push_back("mesh needs --out");
  if (!(m.tol_force > 0.0) || !(m.tol_period > 0.0)) out.push_back("tolerances must be positive");
  if (m.perturb < 0.0 || !std::isfinite(m.perturb)) out.push_back("--perturb must be non-negative");
  if (m.samples < 64) out.push_back("--samples must be at least 64");
  if (m.command == Command::Preset) {
    if (m.preset == "chm" && m.m < 2) out.push_back("--m must be at least 2 for chm");
    if (m.preset == "dihedral" && (m.L < 3 || m.m < 2)) out.push_back("dihedral needs --L >= 3 and --m >= 2");
    if (m.preset != "chm" && m.preset != "catenoid" && m.preset != "costa" && m.preset != "dihedral")
      out.push_back("unknown preset '" + m.preset + "'");
  }
  if (m.command == Command::Identities && (m.m < 1 || m.m > 40)) out.push_back("--m must lie in [1, 40]");
  return out;
}

}  // namespace maxface::cli
