#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxface/configuration.hpp"

namespace maxface::cli {

enum class Command { Balance, Rigidity, Predict, Classify, Mesh, Defects, Identities, Preset, Validate, Table };

const char* to_string(Command c);
std::optional<Command> command_from_string(const std::string& s);

inline constexpr int kExitOk = 0;
inline constexpr int kExitSolver = 2;
inline constexpr int kExitInvalid = 3;

struct RunManifest {
  Command command = Command::Validate;
  std::string input_path;
  std::string output_dir;  // empty: the main report goes to stdout
  std::optional<double> t;
  std::optional<int> resolution;
  std::optional<int> seed;

  // preset
  std::string preset = "chm";
  int m = 2;
  int L = 4;

  // balance: random kick of this size (seeded) before Newton
  double perturb = 0.0;
  // mesh: run the finite-t parameter refinement first
  bool refine = false;

  double tol_force = 1e-12;
  double tol_period = 1e-6;
  int max_iter = 50;
  int samples = 1024;  // classify: waist samples per neck
};

nlohmann::json to_json(const RunManifest& m);

// Checks the manifest itself (t range, required fields). Empty when fine.
std::vector<std::string> manifest_problems(const RunManifest& m);

// One entry per violation: {"path": JSON pointer, "message": ..., optional "value"}.
nlohmann::json validate(const nlohmann::json& config);

// Per-neck leading R amplitude and frequency, prediction, topology; reference
// values alongside when the configuration is a recognised preset.
nlohmann::json reference_table(const Configuration& config);
std::string format_table(const nlohmann::json& table);

// Runs one command. Artifacts go to output_dir; diagnostics to err.
int run(const RunManifest& manifest, std::ostream& out, std::ostream& err);

}  // namespace maxface::cli
