#include <iostream>

#include <CLI11.hpp>

#include "maxface/cli.hpp"

using namespace maxface::cli;

int main(int argc, char** argv) {
  CLI::App app{"maxface: balanced configurations, singularity predictions and maxface meshes"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  RunManifest m;
  double t = 0.0;
  int resolution = 0, seed = 0;

  auto common = [&](CLI::App* sub, bool input, bool with_t) {
    sub->add_option("--out", m.output_dir, "Output directory (default: main report on stdout)");
    if (input) sub->add_option("--input", m.input_path, "Configuration JSON")->check(CLI::ExistingFile);
    if (with_t) sub->add_option("--t", t, "Neck parameter in (0, 1)");
    sub->add_option("--tol-force", m.tol_force, "Force tolerance")->capture_default_str();
    sub->add_option("--tol-period", m.tol_period, "Period tolerance")->capture_default_str();
  };

  auto* preset = app.add_subcommand("preset", "Emit a preset configuration");
  preset->add_option("name", m.preset, "catenoid | costa | chm | dihedral")->capture_default_str();
  preset->add_option("--m", m.m, "Symmetry order")->capture_default_str();
  preset->add_option("--L", m.L, "Plane count (dihedral)")->capture_default_str();
  common(preset, false, false);

  auto* balance = app.add_subcommand("balance", "Newton-balance a configuration");
  common(balance, true, false);
  balance->add_option("--seed", seed, "Seed for --perturb");
  balance->add_option("--perturb", m.perturb, "Random kick size before solving")->capture_default_str();
  balance->add_option("--max-iter", m.max_iter, "Newton iteration cap")->capture_default_str();

  auto* rigidity = app.add_subcommand("rigidity", "Jacobian rank, singular values, topology");
  common(rigidity, true, false);

  auto* predict = app.add_subcommand("predict", "Singularity prediction per neck at t -> 0");
  common(predict, true, false);

  auto* classify = app.add_subcommand("classify", "Classify waist singularities at finite t");
  common(classify, true, true);
  classify->add_option("--samples", m.samples, "Waist samples per neck")->capture_default_str();

  auto* mesh = app.add_subcommand("mesh", "Triangulated surface with singularity flags");
  common(mesh, true, true);
  mesh->add_option("--resolution", resolution, "Angular resolution (default 64)");
  mesh->add_flag("--refine", m.refine, "Refine the Weierstrass parameters first");

  auto* defects = app.add_subcommand("defects", "Divisor and period defects at finite t");
  common(defects, true, true);

  auto* identities = app.add_subcommand("identities", "Exact combinatorial identities");
  identities->add_option("--m", m.m, "Order")->capture_default_str();
  common(identities, false, false);

  auto* validate = app.add_subcommand("validate", "Check a configuration file");
  common(validate, true, false);

  auto* table = app.add_subcommand("table", "Per-neck leading residue table");
  common(table, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  for (auto* sub : app.get_subcommands()) {
    m.command = *command_from_string(sub->get_name());
    auto given = [&](const char* name) {
      auto* opt = sub->get_option_no_throw(name);
      return opt && opt->count() > 0;
    };
    if (given("--t")) m.t = t;
    if (given("--resolution")) m.resolution = resolution;
    if (given("--seed")) m.seed = seed;
  }
  return run(m, std::cout, std::cerr);
}
