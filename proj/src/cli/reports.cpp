#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "maxface/cli.hpp"
#include "maxface/config_json.hpp"
#include "maxface/presets.hpp"
#include "maxface/singularity.hpp"

namespace maxface::cli {

using nlohmann::json;

namespace {

bool same_config(const Configuration& a, const Configuration& b) {
  if (a.plane_count() != b.plane_count()) return false;
  for (int l = 1; l <= a.plane_count(); ++l)
    if (std::abs(a.growth(l) - b.growth(l)) > 1e-9) return false;
  for (int l = 1; l < a.plane_count(); ++l) {
    if (a.necks_at(l) != b.necks_at(l)) return false;
    for (int k = 1; k <= a.necks_at(l); ++k)
      if (std::abs(a.position({l, k}) - b.position({l, k})) > 1e-9) return false;
  }
  return true;
}

// Known closed-form rows: amplitude of the leading R, its frequency, swallowtail count.
struct Reference {
  std::string name;
  std::map<NeckId, json> rows;
};

std::optional<Reference> recognise(const Configuration& c) {
  if (same_config(c, preset_catenoid())) {
    Reference r{"catenoid", {}};
    r.rows[{1, 1}] = {{"kind", "ConeLike"}};
    return r;
  }
  for (int m = 2; m <= 12; ++m) {
    if (c.plane_count() != 3 || c.necks_at(2) != m || !same_config(c, preset_chm(m))) continue;
    Reference r{m == 2 ? "costa" : "chm m=" + std::to_string(m), {}};
    const double centre = (m + 1.0) * m * std::pow(m - 1.0, m);
    r.rows[{1, 1}] = {{"kind", "Discrete"}, {"amplitude", centre}, {"frequency", m}, {"count", 2 * m}};
    for (int k = 1; k <= m; ++k)
      r.rows[{2, k}] = {{"kind", "Discrete"}, {"amplitude", m * m - 1.0}, {"count", 4},
                        {"phase_shift", std::fmod(4.0 * k * std::numbers::pi / m, 2 * std::numbers::pi)}};
    return r;
  }
  return std::nullopt;
}

std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace

json reference_table(const Configuration& config) {
  const NeckSizes sizes = neck_sizes(config);
  const auto ref = recognise(config);
  const auto topo = topology(config, sizes);

  json rows = json::array();
  for (NeckId n : config.necks()) {
    auto pr = predict(config, sizes, n);
    json row;
    row["neck"] = to_json(n);
    row["kind"] = to_string(pr.kind);
    row["count"] = pr.count;
    row["type"] = to_string(pr.type_claim);
    if (pr.kind == PredictionKind::Discrete) {
      const int freq = pr.leading_order;
      const Complex a = pr.leading.amplitude(freq);
      row["order"] = pr.leading_order - 1;
      row["frequency"] = freq;
      row["amplitude"] = std::abs(a);
      row["phase"] = std::arg(a);
    }
    if (ref && ref->rows.count(n)) row["reference"] = ref->rows.at(n);
    rows.push_back(row);
  }

  json ends = json::array();
  for (auto e : topo.end_types) ends.push_back(to_string(e));
  return {{"preset", ref ? json(ref->name) : json(nullptr)},
          {"necks", rows},
          {"genus", topo.genus},
          {"ends", topo.end_count},
          {"end_types", ends},
          {"embeddable", topo.embeddable}};
}

std::string format_table(const json& table) {
  std::ostringstream os;
  if (!table["preset"].is_null()) os << "preset: " << table["preset"].get<std::string>() << "\n";
  os << "genus " << table["genus"] << ", ends " << table["ends"] << ", embeddable "
     << (table["embeddable"].get<bool>() ? "yes" : "no") << "\n";
  os << "neck      kind       R order  freq  amplitude        count  type         | reference\n";
  for (const auto& r : table["necks"]) {
    char head[160];
    std::snprintf(head, sizeof head, "(%d,%d)%*s %-10s ", r["neck"][0].get<int>(), r["neck"][1].get<int>(), 3, "",
                  r["kind"].get<std::string>().c_str());
    os << head;
    if (r.contains("amplitude")) {
      char mid[160];
      std::snprintf(mid, sizeof mid, "%-8d %-5d %-16s %-6d %-12s", r["order"].get<int>(), r["frequency"].get<int>(),
                    fixed(r["amplitude"].get<double>()).c_str(), r["count"].get<int>(),
                    r["type"].get<std::string>().c_str());
      os << mid;
    } else {
      char mid[160];
      std::snprintf(mid, sizeof mid, "%-8s %-5s %-16s %-6d %-12s", "-", "-", "-", r["count"].get<int>(),
                    r["type"].get<std::string>().c_str());
      os << mid;
    }
    if (r.contains("reference")) {
      const auto& ref = r["reference"];
      os << " | " << ref["kind"].get<std::string>();
      if (ref.contains("amplitude")) os << " amplitude " << fixed(ref["amplitude"].get<double>());
      if (ref.contains("frequency")) os << " freq " << ref["frequency"].get<int>();
      if (ref.contains("phase_shift")) os << " shift " << fixed(ref["phase_shift"].get<double>(), 4);
      if (ref.contains("count")) os << " count " << ref["count"].get<int>();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace maxface::cli
