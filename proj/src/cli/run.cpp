#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "maxface/cli.hpp"
#include "maxface/config_json.hpp"
#include "maxface/forces.hpp"
#include "maxface/identities.hpp"
#include "maxface/mesh.hpp"
#include "maxface/presets.hpp"
#include "maxface/refine.hpp"
#include "maxface/singularity.hpp"

namespace maxface::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// Validation failures that never reach a solver.
struct InvalidInput : std::runtime_error {
  json diagnostics;
  InvalidInput(const std::string& msg, json d = json::array()) : std::runtime_error(msg), diagnostics(std::move(d)) {}
};

// Everything is computed first and written at the end, so a failing run
// leaves nothing behind.
struct Artifacts {
  std::vector<std::pair<std::string, std::string>> files;

  void add_json(const std::string& name, const json& j) { files.emplace_back(name, j.dump(2) + "\n"); }
  void add_text(const std::string& name, std::string s) { files.emplace_back(name, std::move(s)); }
};

Configuration load_config(const std::string& path, json* raw = nullptr) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON in ") + path + ": " + e.what());
  }
  if (raw) *raw = j;
  auto diag = validate(j);
  if (!diag.empty()) throw InvalidInput("invalid configuration in " + path, diag);
  return configuration_from_json(j);
}

std::string manifest_comment(const json& manifest, const char* prefix) {
  return std::string(prefix) + " manifest " + manifest.dump() + "\n";
}

std::string fixed17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double angle_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

json prediction_json(const SingularityPrediction& p) {
  json angles = json::array(), gaps = json::array();
  for (std::size_t i = 0; i < p.angles.size(); ++i) {
    angles.push_back(p.angles[i]);
    double next = i + 1 < p.angles.size() ? p.angles[i + 1] : p.angles[0] + kTwoPi;
    gaps.push_back(next - p.angles[i]);
  }
  json j{{"neck", to_json(p.neck)},
         {"kind", to_string(p.kind)},
         {"leading_order", p.leading_order},
         {"count", p.count},
         {"angles", angles},
         {"gaps", gaps},
         {"type", to_string(p.type_claim)},
         {"basis", p.claim_basis}};
  if (p.kind == PredictionKind::Discrete) {
    Complex a = p.leading.amplitude(p.leading_order);
    j["amplitude"] = std::abs(a);
    j["phase"] = std::arg(a);
  }
  const auto& s = p.symmetry;
  j["symmetry"] = {{"rotational_order", s.rotation_unbounded ? json("unbounded") : json(s.rotational_order)},
                   {"vertical_mirrors", s.vertical_mirror_angles},
                   {"horizontal_mirror", s.horizontal_mirror}};
  return j;
}

void cmd_preset(const RunManifest& m, const json& manifest, Artifacts& out) {
  Configuration c = preset_catenoid();
  if (m.preset == "chm")
    c = preset_chm(m.m);
  else if (m.preset == "costa")
    c = preset_chm(2);
  else if (m.preset == "dihedral") {
    DihedralOptions o;
    o.L = m.L;
    o.m = m.m;
    c = preset_dihedral(o);
  }
  json j = to_json(c);
  j["manifest"] = manifest;
  out.add_json("config.json", j);
}

void cmd_balance(const RunManifest& m, const json& manifest, Artifacts& out) {
  Configuration c = load_config(m.input_path);
  if (m.perturb > 0.0) {
    std::mt19937_64 rng(m.seed.value_or(0));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto p = c.all_positions();
    for (auto& lev : p)
      for (auto& z : lev) z += m.perturb * Complex(u(rng), u(rng));
    c = c.with_positions(p);
  }
  NewtonOptions o;
  o.tol = m.tol_force;
  o.max_iter = m.max_iter;
  auto r = newton_balance(c, GaugeFixing::standard(c), o);
  json j = to_json(r.config);
  j["iterations"] = r.iterations;
  j["max_force"] = r.residual;
  j["manifest"] = manifest;
  out.add_json("balanced.json", j);
}

void cmd_rigidity(const RunManifest& m, const json& manifest, Artifacts& out) {
  Configuration c = load_config(m.input_path);
  auto sizes = neck_sizes(c);
  auto r = rigidity(c, sizes);
  auto topo = topology(c, sizes);
  auto w = scalar_W(c, sizes);
  json ends = json::array();
  for (auto e : topo.end_types) ends.push_back(to_string(e));
  json j{{"rank", r.jacobian_rank},
         {"expected_rank", r.expected_rank},
         {"singular_values", r.singular_values},
         {"rigid", r.is_rigid},
         {"balanced", r.balanced},
         {"max_force", r.max_force},
         {"W", w.closed_form},
         {"dW_dQ_rank", dW_dQ_rank(c)},
         {"topology", {{"genus", topo.genus}, {"ends", topo.end_count}, {"end_types", ends},
                       {"embeddable", topo.embeddable}}},
         {"manifest", manifest}};
  out.add_json("rigidity.json", j);
}

void cmd_predict(const RunManifest& m, const json& manifest, Artifacts& out) {
  Configuration c = load_config(m.input_path);
  auto sizes = neck_sizes(c);
  if (double f = max_force(c, sizes); f > 1e-8)
    throw Error(ErrorKind::Unbalanced, "configuration is not balanced", f);
  json necks = json::array();
  for (NeckId n : c.necks()) necks.push_back(prediction_json(predict(c, sizes, n)));
  out.add_json("predict.json", {{"necks", necks}, {"manifest", manifest}});
}

void cmd_classify(const RunManifest& m, const json& manifest, Artifacts& out) {
  Configuration c = load_config(m.input_path);
  auto sizes = neck_sizes(c);
  const double t = *m.t;
  SurfaceModel model(initial_params(c, sizes, t));

  json necks = json::array();
  std::string csv = manifest_comment(manifest, "#") + "level,index,theta,re_A,im_A,class\n";
  for (NeckId n : c.necks()) {
    auto pred = predict(c, sizes, n);
    auto cl = classify_function(t, m.samples, [&](double th) { return governing_A(model, n, th); });
    json pts = json::array();
    for (const auto& p : cl.points)
      pts.push_back({{"theta", p.theta}, {"class", to_string(p.cls)}, {"a_index", p.a_index}});

    // agreement with the t -> 0 prediction
    double worst = 0.0;
    bool count_ok = pred.kind == PredictionKind::Discrete && int(cl.points.size()) == pred.count;
    if (count_ok)
      for (double a : pred.angles) {
        double best = 1e300;
        for (const auto& p : cl.points) best = std::min(best, angle_gap(a, p.theta));
        worst = std::max(worst, best);
      }
    json row{{"neck", to_json(n)}, {"cone_like", cl.cone_like}, {"points", pts}, {"predicted_count", pred.count}};
    row["agrees_with_prediction"] =
        pred.kind == PredictionKind::ConeLike ? cl.cone_like
                                              : count_ok && worst <= std::numbers::pi / (8 * pred.leading_order);
    row["max_angle_deviation"] = count_ok ? json(worst) : json(nullptr);
    necks.push_back(row);

    for (std::size_t i = 0; i < cl.theta_grid.size(); ++i) {
      double th = cl.theta_grid[i];
      csv += std::to_string(n.level) + "," + std::to_string(n.index) + "," + fixed17(th) + "," +
             fixed17(cl.values[i].real()) + "," + fixed17(cl.values[i].imag()) + "," +
             to_string(cl.class_at(th, 1e-9)) + "\n";
    }
    for (const auto& p : cl.points) {
      Complex a = governing_A(model, n, p.theta);
      csv += std::to_string(n.level) + "," + std::to_string(n.index) + "," + fixed17(p.theta) + "," +
             fixed17(a.real()) + "," + fixed17(a.imag()) + "," + to_string(p.cls) + "\n";
    }
  }
  out.add_json("classify.json", {{"t", t}, {"necks", necks}, {"manifest", manifest}});
  out.add_text("classify.csv", csv);
}

void cmd_mesh(const RunManifest& m, const json& manifest, Artifacts& out) {
  Configuration c = load_config(m.input_path);
  auto sizes = neck_sizes(c);
  SurfaceParams params = initial_params(c, sizes, *m.t);
  json summary;
  if (m.refine) {
    auto r = refine_params(params);
    params = r.params;
    summary["refine"] = {{"initial", r.initial_norm}, {"final", r.final_norm}, {"steps", r.steps}};
  }
  SurfaceAtlas atlas{SurfaceModel(params)};
  MeshOptions o;
  o.resolution = m.resolution.value_or(64);
  for (NeckId n : c.necks()) {
    auto p = predict(c, sizes, n);
    if (p.kind == PredictionKind::Discrete) o.swallowtail_angles[n] = p.angles;
  }
  auto mesh = build_mesh(atlas, o);

  std::ostringstream obj, ply;
  write_obj(mesh, obj, manifest);
  write_ply(mesh, ply, manifest);
  out.add_text("mesh.obj", obj.str());
  out.add_text("mesh.ply", ply.str());
  out.add_json("flags.json", flags_json(mesh, manifest));

  summary["vertices"] = mesh.vertices.size();
  summary["faces"] = mesh.faces.size();
  summary["euler_characteristic"] = mesh.euler_characteristic();
  summary["boundary_loops"] = mesh.boundary_loops();
  summary["singular_curve_vertices"] = mesh.count(SingClass::SingularCurve);
  summary["swallowtails"] = mesh.count(SingClass::Swallowtail);
  summary["diameter"] = mesh.diameter;
  summary["seam_mismatch"] = mesh.seam_mismatch;
  summary["seam_tolerance"] = mesh.seam_tolerance;
  summary["closure_defect"] = mesh.closure_defect;
  summary["epsilon"] = params.epsilon;
  summary["manifest"] = manifest;
  out.add_json("mesh.json", summary);
}

void cmd_defects(const RunManifest& m, const json& manifest, Artifacts& out) {
  Configuration c = load_config(m.input_path);
  SurfaceParams params = initial_params(c, neck_sizes(c), *m.t);
  SurfaceModel model(params);
  auto div = divisor_defect(model);
  SurfaceAtlas atlas{SurfaceModel(params)};
  json cycles = json::array();
  double worst_gamma = 0.0;
  for (const auto& d : all_period_defects(atlas)) {
    cycles.push_back({{"cycle", d.cycle.name()},
                      {"horizontal", complex_to_json(d.horizontal)},
                      {"horizontal_abs", std::abs(d.horizontal)},
                      {"vertical", d.vertical}});
    if (d.cycle.kind == CycleId::Kind::Gamma) worst_gamma = std::max(worst_gamma, std::abs(d.horizontal));
  }
  out.add_json("defects.json", {{"t", *m.t},
                                {"epsilon", params.epsilon},
                                {"divisor", {{"per_plane", div.per_plane}, {"max", div.max}}},
                                {"periods", cycles},
                                {"max_gamma_horizontal", worst_gamma},
                                {"gamma_within_tolerance", worst_gamma <= m.tol_period},
                                {"manifest", manifest}});
}

void cmd_identities(const RunManifest& m, const json& manifest, Artifacts& out) {
  json rows = json::array();
  bool all = true;
  for (int n = -m.m; n <= -2; ++n)
    for (int l = -n - 1; l <= m.m; ++l) {
      if (!identity1_in_domain(m.m, n, l)) continue;
      auto v = identity1(m.m, n, l), cf = identity1_closed_form(m.m, n, l);
      all = all && v == cf;
      rows.push_back({{"n", n}, {"l", l}, {"value", v.str()}, {"closed_form", cf.str()}});
    }
  out.add_json("identities.json", {{"m", m.m},
                                   {"identity2", identity2(m.m).str()},
                                   {"identity1", rows},
                                   {"identity1_matches", all},
                                   {"manifest", manifest}});
}

void cmd_table(const RunManifest& m, const json& manifest, Artifacts& out) {
  Configuration c = load_config(m.input_path);
  if (double f = max_force(c, neck_sizes(c)); f > 1e-8)
    throw Error(ErrorKind::Unbalanced, "configuration is not balanced", f);
  json t = reference_table(c);
  out.add_text("table.txt", manifest_comment(manifest, "#") + format_table(t));
  t["manifest"] = manifest;
  out.add_json("table.json", t);
}

int flush(const RunManifest& m, const Artifacts& a, std::ostream& out) {
  if (m.output_dir.empty()) {
    // stdout gets the first artifact; it is the report the command is named for
    if (!a.files.empty()) out << a.files.front().second;
    return kExitOk;
  }
  fs::create_directories(m.output_dir);
  for (const auto& [name, body] : a.files) {
    std::ofstream f(fs::path(m.output_dir) / name, std::ios::binary);
    f << body;
    if (!f) throw std::runtime_error("cannot write " + (fs::path(m.output_dir) / name).string());
  }
  return kExitOk;
}

}  // namespace

int run(const RunManifest& m, std::ostream& out, std::ostream& err) {
  auto problems = manifest_problems(m);
  if (!problems.empty()) {
    for (const auto& p : problems) err << "error: " << p << "\n";
    return kExitInvalid;
  }
  const json manifest = to_json(m);
  Artifacts a;
  try {
    switch (m.command) {
      case Command::Preset: cmd_preset(m, manifest, a); break;
      case Command::Balance: cmd_balance(m, manifest, a); break;
      case Command::Rigidity: cmd_rigidity(m, manifest, a); break;
      case Command::Predict: cmd_predict(m, manifest, a); break;
      case Command::Classify: cmd_classify(m, manifest, a); break;
      case Command::Mesh: cmd_mesh(m, manifest, a); break;
      case Command::Defects: cmd_defects(m, manifest, a); break;
      case Command::Identities: cmd_identities(m, manifest, a); break;
      case Command::Table: cmd_table(m, manifest, a); break;
      case Command::Validate: {
        json raw;
        try {
          load_config(m.input_path, &raw);
        } catch (const InvalidInput& e) {
          if (raw.is_null()) throw;  // unreadable or malformed: no artifact
          a.add_json("diagnostics.json", {{"diagnostics", e.diagnostics}, {"manifest", manifest}});
          for (const auto& d : e.diagnostics)
            err << d["path"].get<std::string>() << ": " << d["message"].get<std::string>() << "\n";
          flush(m, a, out);
          return kExitInvalid;
        }
        a.add_json("diagnostics.json", {{"diagnostics", json::array()}, {"manifest", manifest}});
        break;
      }
    }
    return flush(m, a, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& d : e.diagnostics)
      err << "  " << d["path"].get<std::string>() << ": " << d["message"].get<std::string>() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::InvalidConfiguration || e.kind() == ErrorKind::NonZeroGrowthSum) return kExitInvalid;
    return kExitSolver;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitSolver;
  }
}

}  // namespace maxface::cli
