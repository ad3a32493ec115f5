#include "maxface/config_json.hpp"

#include <string>

namespace maxface {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorKind::InvalidConfiguration, "complex numbers are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const Configuration& config) {
  json necks = json::array();
  for (const auto& lev : config.all_positions()) {
    json row = json::array();
    for (Complex z : lev) row.push_back(complex_to_json(z));
    necks.push_back(row);
  }
  return json{{"L", config.plane_count()}, {"necks", necks}, {"Q", config.growths()}};
}

Configuration configuration_from_json(const json& j) {
  auto bad = [](const std::string& m) { throw Error(ErrorKind::InvalidConfiguration, m); };
  if (!j.is_object()) bad("configuration must be a JSON object");
  if (!j.contains("L") || !j["L"].is_number_integer()) bad("/L must be an integer");
  if (!j.contains("necks") || !j["necks"].is_array()) bad("/necks must be an array");
  if (!j.contains("Q") || !j["Q"].is_array()) bad("/Q must be an array");
  const int L = j["L"].get<int>();
  if (static_cast<int>(j["Q"].size()) != L) bad("/Q must have L entries");
  std::vector<double> Q;
  for (const auto& q : j["Q"]) {
    if (!q.is_number()) bad("/Q entries must be numbers");
    Q.push_back(q.get<double>());
  }
  std::vector<std::vector<Complex>> p;
  for (const auto& lev : j["necks"]) {
    if (!lev.is_array()) bad("/necks entries must be arrays");
    std::vector<Complex> row;
    for (const auto& z : lev) row.push_back(complex_from_json(z));
    p.push_back(std::move(row));
  }
  return Configuration(std::move(p), std::move(Q));
}

json to_json(NeckId neck) { return json::array({neck.level, neck.index}); }

}  // namespace maxface
