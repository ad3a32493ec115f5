#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "maxface/laurent.hpp"
#include "maxface/polynomial.hpp"
#include "maxface/surface.hpp"

namespace maxface {

namespace {

Complex inv_offset(Complex z, Complex x) {
  Complex d = z - x;
  if (std::abs(d) <= 1e-14 * std::max(1.0, std::abs(z)))
    throw Error(ErrorKind::PoleEvaluation, "evaluation at a node");
  return 1.0 / d;
}

}  // namespace

Complex PlaneData::g(Complex z) const {
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += g_res[i] * inv_offset(z, x[i]);
  return s;
}

Complex PlaneData::dg(Complex z) const {
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Complex w = inv_offset(z, x[i]);
    s -= g_res[i] * w * w;
  }
  return s;
}

Complex PlaneData::dh_limit(Complex z) const {
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += h_res[i] * inv_offset(z, x[i]);
  return s;
}

Complex PlaneData::dh(Complex z) const {
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Complex w = inv_offset(z, x[i]);
    s += h_res[i] * w;
    Complex pw = w;
    for (std::size_t q = 1; q < tails[i].size(); ++q) {
      pw *= w;
      s += tails[i][q] * pw;
    }
  }
  return s;
}

Complex PlaneData::ddh(Complex z) const {
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Complex w = inv_offset(z, x[i]);
    Complex pw = w * w;
    s -= h_res[i] * pw;
    for (std::size_t q = 1; q < tails[i].size(); ++q) {
      pw *= w;
      s -= static_cast<double>(q + 1) * tails[i][q] * pw;
    }
  }
  return s;
}

int PlaneData::node_of(NeckId neck, bool upper) const {
  for (std::size_t i = 0; i < refs.size(); ++i)
    if (refs[i].neck == neck && refs[i].upper == upper) return static_cast<int>(i);
  throw Error(ErrorKind::InvalidConfiguration, "neck has no node on this plane");
}

double PlaneData::separation(int i) const {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < x.size(); ++j)
    if (static_cast<int>(j) != i) d = std::min(d, std::abs(x[j] - x[i]));
  return d;
}

std::vector<Complex> PlaneData::gauss_zeros() const {
  Polynomial num({0.0});
  for (std::size_t j = 0; j < x.size(); ++j) {
    std::vector<Complex> others;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (i != j) others.push_back(x[i]);
    num = num + Polynomial::from_roots(others) * g_res[j];
  }
  auto c = num.coeffs();
  double scale = num.max_coefficient();
  while (c.size() > 1 && std::abs(c.back()) <= 1e-13 * scale) c.pop_back();
  if (c.size() <= 1) return {};
  // multiple zeros come back as a tight cluster; merge them
  double sep = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::isfinite(separation(static_cast<int>(i)))) sep = std::min(sep, separation(static_cast<int>(i)));
  std::vector<Complex> out;
  std::vector<int> weight;
  for (Complex r : Polynomial(c).roots()) {
    bool merged = false;
    for (std::size_t k = 0; k < out.size() && !merged; ++k)
      if (std::abs(r - out[k]) <= 1e-3 * sep) {
        out[k] = (out[k] * static_cast<double>(weight[k]) + r) / static_cast<double>(weight[k] + 1);
        ++weight[k];
        merged = true;
      }
    if (!merged) {
      out.push_back(r);
      weight.push_back(1);
    }
  }
  for (Complex& r : out)
    if (std::abs(r) <= 1e-9 * sep) r = 0.0;
  return out;
}

SurfaceModel::SurfaceModel(SurfaceParams params, GlueOptions options)
    : params_(std::move(params)), options_(options) {
  const int L = params_.plane_count();
  if (L < 2 || static_cast<int>(params_.a.size()) != L - 1)
    throw Error(ErrorKind::InvalidConfiguration, "inconsistent parameter shapes");
  planes_.resize(L);
  for (int l = 1; l <= L; ++l) {
    PlaneData& pd = planes_[l - 1];
    pd.plane = l;
    for (int k = 1; k <= params_.necks_at(l); ++k) {
      pd.x.push_back(params_.a[l - 1][k - 1]);
      pd.g_res.push_back(params_.alpha[l - 1][k - 1]);
      pd.h_res.push_back(-params_.r[l - 1][k - 1]);
      pd.refs.push_back({{l, k}, false});
    }
    for (int k = 1; k <= params_.necks_at(l - 1); ++k) {
      pd.x.push_back(params_.b[l - 2][k - 1]);
      pd.g_res.push_back(params_.beta[l - 2][k - 1]);
      pd.h_res.push_back(params_.r[l - 2][k - 1]);
      pd.refs.push_back({{l - 1, k}, true});
    }
    pd.tails.assign(pd.x.size(), {});
  }
  if (options_.tails) glue();
}

int SurfaceModel::node_of(NeckId neck, bool upper) const {
  return plane(plane_of(neck, upper)).node_of(neck, upper);
}

// Fixed point for the node tails. Across each neck the chart of one side is
// t^2 over the chart of the other, so the part of dh that is regular at a
// node must reappear as a pole of higher order at the partner node. The
// regular part is read off as contour moments C_n of dh g^{n+1}.
void SurfaceModel::glue() {
  const int NT = options_.tail_order;
  const double t = params_.t;
  const int M = options_.contour_points;

  struct Side {
    int plane, node;
  };
  std::vector<std::pair<Side, Side>> pairs;
  for (NeckId n : params_.necks())
    pairs.push_back({{n.level, node_of(n, false)}, {n.level + 1, node_of(n, true)}});

  // principal parts of g^{n+1} at every node depend only on g
  std::vector<std::vector<std::vector<laurent::Series>>> pp(planes_.size());
  for (std::size_t l = 0; l < planes_.size(); ++l) {
    const PlaneData& pd = planes_[l];
    pp[l].resize(pd.x.size());
    for (std::size_t i = 0; i < pd.x.size(); ++i)
      for (int p = 1; p <= NT + 1; ++p) {
        auto h = laurent::regular_part(pd.x, pd.g_res, i, p + 2);
        pp[l][i].push_back(laurent::principal_part_of_power(pd.g_res[i], h, p));
      }
  }

  auto moments = [&](const Side& s) {
    const PlaneData& pd = planes_[s.plane - 1];
    double sep = pd.separation(s.node);
    double rr = std::isfinite(sep) ? 0.4 * sep : 0.5;
    std::vector<Complex> C(NT + 2, 0.0);
    for (int j = 0; j < M; ++j) {
      double th = 2.0 * std::numbers::pi * j / M;
      Complex e = std::polar(1.0, th);
      Complex z = pd.x[s.node] + rr * e;
      Complex f = pd.dh(z) * rr * e;  // dh dz / (i dtheta)
      Complex G = pd.g(z);
      Complex Gp = 1.0;
      for (int n = -1; n <= NT; ++n) {
        C[n + 1] += f * Gp;
        Gp *= G;
      }
    }
    for (auto& c : C) c /= static_cast<double>(M);
    return C;
  };

  for (int it = 0; it < options_.iterations; ++it) {
    std::vector<std::pair<std::vector<Complex>, std::vector<Complex>>> co;
    for (const auto& [A, B] : pairs) co.push_back({moments(A), moments(B)});
    for (std::size_t k = 0; k < pairs.size(); ++k)
      for (int side = 0; side < 2; ++side) {
        const Side& X = side == 0 ? pairs[k].first : pairs[k].second;
        const auto& C = side == 0 ? co[k].second : co[k].first;
        std::vector<Complex> e(NT + 3, 0.0);
        for (int n = 0; n <= NT; ++n) {
          const auto& d = pp[X.plane - 1][X.node][n];
          double w = std::pow(t, 2 * n + 2) / (n + 1);
          for (int q = 1; q <= n + 1; ++q) e[q] += C[n + 1] * w * d[q] * static_cast<double>(-q);
        }
        planes_[X.plane - 1].tails[X.node] = e;
      }
  }
}

Complex SurfaceModel::gauss(int l, Complex z) const {
  Complex g = plane(l).g(z);
  return l % 2 == 1 ? params_.t * g : 1.0 / (params_.t * g);
}

Complex SurfaceModel::z_of_chart(NeckId neck, bool upper, Complex u) const {
  const PlaneData& pd = plane(plane_of(neck, upper));
  int i = pd.node_of(neck, upper);
  return z_of_chart(neck, upper, u, pd.x[i] + pd.g_res[i] * u);
}

Complex SurfaceModel::z_of_chart(NeckId neck, bool upper, Complex u, Complex guess) const {
  const PlaneData& pd = plane(plane_of(neck, upper));
  Complex z = guess;
  for (int it = 0; it < 60; ++it) {
    Complex G = pd.g(z);
    Complex f = 1.0 / G - u;
    Complex step = f / (-pd.dg(z) / (G * G));
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) return z;
  }
  if (std::isfinite(z.real()) && std::isfinite(z.imag()) &&
      std::abs(1.0 / pd.g(z) - u) <= 1e-12 * std::max(1e-300, std::abs(u)))
    return z;
  throw Error(ErrorKind::OutsideAnnulus, "chart inversion failed", std::abs(u));
}

Complex SurfaceModel::dz_du(int l, Complex z) const {
  const PlaneData& pd = plane(l);
  Complex G = pd.g(z);
  return -G * G / pd.dg(z);
}

Complex governing_A(const SurfaceModel& model, NeckId neck, double theta) {
  const double t = model.t();
  if (t >= model.params().epsilon)
    throw Error(ErrorKind::OutsideAnnulus, "waist outside the chart disk", t);
  Complex v = std::polar(t, theta);
  Complex z = model.z_of_chart(neck, false, v);
  return v * model.plane(neck.level).dh(z) * model.dz_du(neck.level, z);
}

namespace {

// Zeros of dh inside a circle around zeta, as offsets from zeta. Power sums
// of the offsets from the argument principle, then Newton's identities.
std::vector<Complex> zeros_near(const PlaneData& pd, Complex zeta, double rho) {
  constexpr int M = 256;
  std::vector<Complex> p(1, 0.0);
  int k = 0;
  for (int pass = 0; pass < 2; ++pass) {
    const int top = pass == 0 ? 0 : k;
    p.assign(top + 1, 0.0);
    for (int j = 0; j < M; ++j) {
      Complex w = std::polar(rho, 2 * std::numbers::pi * j / M);
      Complex f = pd.ddh(zeta + w) / pd.dh(zeta + w) * w / double(M);  // dz/(2 pi i) = w ds
      Complex wp = 1.0;
      for (int q = 0; q <= top; ++q, wp *= w) p[q] += f * wp;
    }
    k = static_cast<int>(std::lround(p[0].real()));
    if (k <= 0) return {};
  }
  // e_1..e_k from p_1..p_k; monic polynomial prod (w - r_i)
  std::vector<Complex> e(k + 1, 0.0);
  e[0] = 1.0;
  for (int q = 1; q <= k; ++q) {
    Complex acc = 0.0;
    for (int i = 1; i <= q; ++i) acc += ((i % 2) ? 1.0 : -1.0) * e[q - i] * p[i];
    e[q] = acc / double(q);
  }
  if (k == 1) return {e[1]};
  std::vector<Complex> coeffs(k + 1);
  for (int q = 0; q <= k; ++q) {
    Complex c = ((q % 2) ? -1.0 : 1.0) * e[q];
    // roundoff on a symmetric multiple zero would otherwise show up as c^{1/k}
    if (q > 0 && std::abs(c) <= 1e-13 * std::pow(rho, q)) c = 0.0;
    coeffs[k - q] = c;
  }
  bool all_zero = true;
  for (int q = 0; q < k; ++q) all_zero = all_zero && coeffs[q] == 0.0;
  if (all_zero) return std::vector<Complex>(k, 0.0);
  return Polynomial(coeffs).roots();
}

}  // namespace

DivisorReport divisor_defect(const SurfaceModel& model) {
  DivisorReport out;
  for (int l = 1; l <= model.plane_count(); ++l) {
    const PlaneData& pd = model.plane(l);
    const auto zeros = pd.gauss_zeros();
    double worst = 0.0;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      double room = std::numeric_limits<double>::infinity();
      for (Complex x : pd.x) room = std::min(room, std::abs(x - zeros[i]));
      for (std::size_t j = 0; j < zeros.size(); ++j)
        if (j != i) room = std::min(room, std::abs(zeros[j] - zeros[i]));
      if (!std::isfinite(room)) room = 1.0;
      auto near = zeros_near(pd, zeros[i], 0.3 * room);
      if (near.empty()) {
        worst = std::numeric_limits<double>::infinity();
        continue;
      }
      for (Complex w : near) worst = std::max(worst, std::abs(w));
    }
    out.per_plane.push_back(worst);
    out.max = std::max(out.max, worst);
  }
  return out;
}

}  // namespace maxface
