#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "maxface/cli.hpp"
#include "maxface/config_json.hpp"
#include "maxface/presets.hpp"

using namespace maxface;
using namespace maxface::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("maxface_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& f) const { return (path / f).string(); }
};

std::string write_file(const TempDir& d, const std::string& name, const std::string& body) {
  std::ofstream(d / name) << body;
  return d / name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct Result {
  int code;
  std::string out, err;
};

Result run_cmd(const RunManifest& m) {
  std::ostringstream out, err;
  int code = run(m, out, err);
  return {code, out.str(), err.str()};
}

RunManifest with_input(Command c, const std::string& input) {
  RunManifest m;
  m.command = c;
  m.input_path = input;
  return m;
}

}  // namespace

TEST_CASE("preset chm m=4") {
  RunManifest m;
  m.command = Command::Preset;
  m.preset = "chm";
  m.m = 4;
  auto r = run_cmd(m);
  REQUIRE(r.code == kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["Q"] == json({-3.0, -1.0, 4.0}));
  CHECK(j["manifest"]["command"] == "preset");
  CHECK(configuration_from_json(j).total_necks() == 5);
}

TEST_CASE("predict on Costa lists four swallowtails per neck") {
  TempDir d("predict");
  auto in = write_file(d, "costa.json", to_json(preset_chm(2)).dump());
  auto r = run_cmd(with_input(Command::Predict, in));
  REQUIRE(r.code == kExitOk);
  auto j = json::parse(r.out);
  REQUIRE(j["necks"].size() == 3);
  CHECK(j["necks"][0]["neck"] == json({1, 1}));
  CHECK(j["necks"][0]["count"] == 4);
  CHECK(j["necks"][0]["type"] == "Swallowtail");
  CHECK(j["manifest"]["input"] == in);
}

TEST_CASE("malformed input exits 3 and leaves no artifacts") {
  TempDir d("bad");
  auto in = write_file(d, "bad.json", "{\"L\": 3, \"necks\": [");
  for (Command c : {Command::Predict, Command::Validate, Command::Mesh}) {
    auto m = with_input(c, in);
    m.output_dir = d / "out";
    m.t = 0.05;
    auto r = run_cmd(m);
    CHECK(r.code == kExitInvalid);
    CHECK(r.err.find("malformed JSON") != std::string::npos);
    CHECK_FALSE(fs::exists(d / "out"));
  }
  // bad manifest values
  auto m = with_input(Command::Classify, in);
  m.t = 1.5;
  CHECK(run_cmd(m).code == kExitInvalid);
}

TEST_CASE("solver failures exit 2") {
  TempDir d("solver");
  auto in = write_file(d, "costa.json", to_json(preset_chm(2)).dump());
  auto m = with_input(Command::Defects, in);
  m.t = 0.5;  // disks overlap
  auto r = run_cmd(m);
  CHECK(r.code == kExitSolver);
  CHECK(r.err.find("DisksOverlap") != std::string::npos);

  // two necks on a level with nothing else cannot balance
  json bad = {{"L", 2}, {"necks", {{{0.0, 0.0}, {1.0, 0.0}}}}, {"Q", {-1.0, 1.0}}};
  auto b = run_cmd(with_input(Command::Balance, write_file(d, "pair.json", bad.dump())));
  CHECK(b.code == kExitSolver);
}

TEST_CASE("validate") {
  auto chm = to_json(preset_chm(3));
  CHECK(validate(chm).empty());

  auto dup = chm;
  dup["necks"][1][2] = dup["necks"][1][0];
  auto d = validate(dup);
  REQUIRE(d.size() == 1);
  CHECK(d[0]["path"] == "/necks/1/2");
  std::string msg = d[0]["message"];
  CHECK(msg.find("(2,1)") != std::string::npos);
  CHECK(msg.find("(2,3)") != std::string::npos);

  auto sum = chm;
  sum["Q"][2] = sum["Q"][2].get<double>() + 0.01;
  auto s = validate(sum);
  REQUIRE(s.size() == 1);
  CHECK(s[0]["path"] == "/Q");
  CHECK(s[0]["value"].get<double>() == doctest::Approx(0.01));

  json broken = {{"L", 3}, {"necks", {{{0, 0}}, {"x", {1, 2, 3}}}}, {"Q", {1, "a", -1}}};
  auto b = validate(broken);
  std::set<std::string> paths;
  for (const auto& e : b) paths.insert(e["path"]);
  CHECK(paths.count("/Q/1"));
  CHECK(paths.count("/necks/1/0"));
  CHECK(paths.count("/necks/1/1"));

  CHECK(validate(json::array()).size() == 1);

  TempDir dir("validate");
  auto m = with_input(Command::Validate, write_file(dir, "dup.json", dup.dump()));
  m.output_dir = dir / "out";
  auto r = run_cmd(m);
  CHECK(r.code == kExitInvalid);
  auto written = json::parse(slurp(dir / "out/diagnostics.json"));
  CHECK(written["diagnostics"].size() == 1);
}

TEST_CASE("reference table") {
  auto costa = reference_table(preset_chm(2));
  CHECK(costa["preset"] == "costa");
  CHECK(costa["genus"] == 1);
  CHECK(costa["ends"] == 3);
  std::vector<double> amps;
  for (const auto& r : costa["necks"]) amps.push_back(r["amplitude"]);
  REQUIRE(amps.size() == 3);
  CHECK(amps[0] == doctest::Approx(6.0));
  CHECK(amps[1] == doctest::Approx(3.0));
  CHECK(amps[2] == doctest::Approx(3.0));

  auto chm3 = reference_table(preset_chm(3));
  CHECK(chm3["necks"][0]["amplitude"].get<double>() == doctest::Approx(96.0));
  CHECK(chm3["necks"][0]["reference"]["amplitude"].get<double>() == doctest::Approx(96.0));
  CHECK(chm3["necks"][0]["frequency"] == 3);

  auto cat = reference_table(preset_catenoid());
  CHECK(cat["necks"][0]["kind"] == "ConeLike");
  CHECK(cat["necks"][0]["reference"]["kind"] == "ConeLike");
  auto text = format_table(cat);
  CHECK(text.find("ConeLike") != std::string::npos);

  CHECK(reference_table(preset_chm(3).translated({0.5, 0.0}))["preset"].is_null());
}

TEST_CASE("classify agrees with predict at small t") {
  TempDir d("classify");
  std::vector<std::pair<Configuration, double>> cases{{preset_catenoid(), 0.05}, {preset_chm(2), 0.05},
                                                      {preset_chm(3), 0.02}};
  for (const auto& [c, t] : cases) {
    auto m = with_input(Command::Classify, write_file(d, "c.json", to_json(c).dump()));
    m.t = t;
    m.output_dir = d / "out";
    auto r = run_cmd(m);
    REQUIRE(r.code == kExitOk);
    auto j = json::parse(slurp(d / "out/classify.json"));
    for (const auto& n : j["necks"]) {
      INFO(n.dump());
      CHECK(n["agrees_with_prediction"].get<bool>());
    }
    CHECK(slurp(d / "out/classify.csv").rfind("# manifest {", 0) == 0);
  }
}

TEST_CASE("identical manifests give identical artifacts") {
  TempDir d("idem");
  auto in = write_file(d, "costa.json", to_json(preset_chm(2)).dump());
  auto m = with_input(Command::Mesh, in);
  m.t = 0.05;
  m.resolution = 16;
  m.output_dir = d / "a";
  REQUIRE(run_cmd(m).code == kExitOk);
  m.output_dir = d / "b";
  REQUIRE(run_cmd(m).code == kExitOk);
  for (const char* f : {"mesh.obj", "mesh.ply", "flags.json"}) {
    auto a = slurp(d / (std::string("a/") + f));
    auto b = slurp(d / (std::string("b/") + f));
    CHECK(a.size() > 100);
    // only the output directory differs in the embedded manifest
    auto strip = [](std::string s) {
      for (const char* dir : {"/a\"", "/b\""}) {
        auto at = s.find(dir);
        while (at != std::string::npos) {
          s.replace(at, 3, "/X\"");
          at = s.find(dir);
        }
      }
      return s;
    };
    CHECK(strip(a) == strip(b));
  }
  auto summary = json::parse(slurp(d / "a/mesh.json"));
  CHECK(summary["euler_characteristic"] == -3);
  CHECK(summary["swallowtails"] == 12);

  auto bal = with_input(Command::Balance, in);
  bal.perturb = 0.01;
  bal.seed = 9;
  auto r1 = run_cmd(bal), r2 = run_cmd(bal);
  REQUIRE(r1.code == kExitOk);
  CHECK(r1.out == r2.out);
  CHECK(json::parse(r1.out)["max_force"].get<double>() <= 1e-12);
}

TEST_CASE("rigidity, defects and identities reports") {
  TempDir d("reports");
  auto in = write_file(d, "chm3.json", to_json(preset_chm(3)).dump());
  auto r = run_cmd(with_input(Command::Rigidity, in));
  REQUIRE(r.code == kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["rank"] == 2);
  CHECK(j["rigid"] == true);
  CHECK(j["topology"]["genus"] == 2);

  auto m = with_input(Command::Defects, in);
  m.t = 0.02;
  auto def = run_cmd(m);
  REQUIRE(def.code == kExitOk);
  auto dj = json::parse(def.out);
  CHECK(dj["periods"].size() == 10);
  CHECK(dj["divisor"]["max"].get<double>() < 1e-2);

  RunManifest id;
  id.command = Command::Identities;
  id.m = 6;
  auto ij = json::parse(run_cmd(id).out);
  CHECK(ij["identity2"] == "1");
  CHECK(ij["identity1_matches"] == true);
}
