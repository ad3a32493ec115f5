#include <cmath>
#include <numeric>
#include <sstream>

#include "maxface/cli.hpp"

namespace maxface::cli {

using nlohmann::json;

namespace {

struct Diagnostics {
  json list = json::array();

  void add(const std::string& path, const std::string& message) {
    list.push_back({{"path", path}, {"message", message}});
  }
  void add(const std::string& path, const std::string& message, double value) {
    list.push_back({{"path", path}, {"message", message}, {"value", value}});
  }
};

std::string neck_name(int l, int k) {
  return "(" + std::to_string(l) + "," + std::to_string(k) + ")";
}

// Same closeness rule the Configuration constructor uses.
bool coincide(Complex a, Complex b) {
  return std::abs(a - b) <= 1e-12 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

json validate(const json& config) {
  Diagnostics d;
  if (!config.is_object()) {
    d.add("", "configuration must be a JSON object");
    return d.list;
  }

  int L = -1;
  if (!config.contains("L"))
    d.add("/L", "missing");
  else if (!config["L"].is_number_integer())
    d.add("/L", "must be an integer");
  else if ((L = config["L"].get<int>()) < 2)
    d.add("/L", "need at least 2 planes", L);

  std::vector<double> Q;
  bool q_ok = true;
  if (!config.contains("Q") || !config["Q"].is_array()) {
    d.add("/Q", "must be an array of growths");
    q_ok = false;
  } else {
    const auto& q = config["Q"];
    if (L >= 2 && static_cast<int>(q.size()) != L) {
      d.add("/Q", "expected " + std::to_string(L) + " entries, got " + std::to_string(q.size()));
      q_ok = false;
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (!q[i].is_number() || !std::isfinite(q[i].get<double>())) {
        d.add("/Q/" + std::to_string(i), "must be a finite number");
        q_ok = false;
      } else {
        Q.push_back(q[i].get<double>());
      }
    }
  }

  std::vector<std::vector<Complex>> p;
  std::vector<std::vector<bool>> p_ok;
  if (!config.contains("necks") || !config["necks"].is_array()) {
    d.add("/necks", "must be an array of levels");
  } else {
    const auto& necks = config["necks"];
    if (L >= 2 && static_cast<int>(necks.size()) != L - 1)
      d.add("/necks", "expected " + std::to_string(L - 1) + " levels, got " + std::to_string(necks.size()));
    for (std::size_t l = 0; l < necks.size(); ++l) {
      const std::string lp = "/necks/" + std::to_string(l);
      p.emplace_back();
      p_ok.emplace_back();
      if (!necks[l].is_array()) {
        d.add(lp, "must be an array of positions");
        continue;
      }
      if (necks[l].empty()) d.add(lp, "level " + std::to_string(l + 1) + " has no necks");
      for (std::size_t k = 0; k < necks[l].size(); ++k) {
        const auto& z = necks[l][k];
        bool ok = z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number();
        if (ok) {
          Complex c(z[0].get<double>(), z[1].get<double>());
          ok = std::isfinite(c.real()) && std::isfinite(c.imag());
          p.back().push_back(c);
        } else {
          p.back().push_back(0.0);
        }
        p_ok.back().push_back(ok);
        if (!ok) d.add(lp + "/" + std::to_string(k), "must be a finite [re, im] pair");
      }
    }
  }

  // distinct poles: within a level, and between adjacent levels sharing a plane
  for (std::size_t l = 0; l < p.size(); ++l) {
    const int lev = static_cast<int>(l) + 1;
    for (std::size_t k = 0; k < p[l].size(); ++k) {
      if (!p_ok[l][k]) continue;
      for (std::size_t j = 0; j < k; ++j)
        if (p_ok[l][j] && coincide(p[l][j], p[l][k]))
          d.add("/necks/" + std::to_string(l) + "/" + std::to_string(k),
                "necks " + neck_name(lev, int(j) + 1) + " and " + neck_name(lev, int(k) + 1) +
                    " coincide (indices " + std::to_string(j) + " and " + std::to_string(k) + ")");
      if (l == 0) continue;
      for (std::size_t j = 0; j < p[l - 1].size(); ++j)
        if (p_ok[l - 1][j] && coincide(p[l - 1][j], p[l][k]))
          d.add("/necks/" + std::to_string(l) + "/" + std::to_string(k),
                "necks " + neck_name(lev - 1, int(j) + 1) + " and " + neck_name(lev, int(k) + 1) +
                    " share a position on plane " + std::to_string(lev));
    }
  }

  if (q_ok && !Q.empty()) {
    double sum = std::accumulate(Q.begin(), Q.end(), 0.0);
    if (std::abs(sum) > 1e-12) {
      std::ostringstream os;
      os << "growths must sum to zero; sum is " << sum;
      d.add("/Q", os.str(), sum);
    } else if (static_cast<int>(p.size()) == static_cast<int>(Q.size()) - 1) {
      // neck sizes from the growths; they have to be positive
      double prev = 0.0;
      std::size_t below = 0;
      for (std::size_t l = 0; l < p.size(); ++l) {
        if (p[l].empty()) break;
        double c = (below * prev - Q[l]) / p[l].size();
        if (!(c > 0.0)) {
          std::ostringstream os;
          os << "neck size c_" << l + 1 << " = " << c << " is not positive";
          d.add("/Q/" + std::to_string(l), os.str(), c);
        }
        prev = c;
        below = p[l].size();
      }
    }
  }
  return d.list;
}

}  // namespace maxface::cli
