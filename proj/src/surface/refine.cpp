#include "maxface/refine.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace maxface {

std::vector<double> defect_vector(const SurfaceParams& params, const GlueOptions& glue) {
  SurfaceAtlas atlas{SurfaceModel(params, glue)};
  std::vector<double> out;
  for (int l = 1; l <= atlas.plane_count(); ++l) {
    const PlaneData& pd = atlas.model().plane(l);
    for (Complex zeta : atlas.gauss_zeros(l)) {
      Complex d = pd.dh(zeta);
      out.push_back(d.real());
      out.push_back(d.imag());
    }
  }
  for (const auto& d : all_period_defects(atlas)) {
    if (d.cycle.kind == CycleId::Kind::Threading) out.push_back(d.vertical);
    out.push_back(d.horizontal.real());
    out.push_back(d.horizontal.imag());
  }
  return out;
}

double defect_norm(const SurfaceParams& params, const GlueOptions& glue) {
  double s = 0.0;
  for (double x : defect_vector(params, glue)) s += x * x;
  return std::sqrt(s);
}

namespace {

// Real coordinates of the free parameters.
struct Packing {
  const SurfaceParams& base;

  bool a_free(int l, int k) const {
    if (l == 1 && k == 1) return false;
    // second a in level order is the other gauge pin
    int seen = 0;
    for (int ll = 1; ll <= static_cast<int>(base.a.size()); ++ll)
      for (int kk = 1; kk <= base.necks_at(ll); ++kk) {
        if (++seen == 2) return !(ll == l && kk == k);
      }
    return true;
  }

  std::vector<double> pack(const SurfaceParams& p) const {
    std::vector<double> x;
    auto put = [&](Complex z) {
      x.push_back(z.real());
      x.push_back(z.imag());
    };
    for (int l = 1; l <= static_cast<int>(p.a.size()); ++l)
      for (int k = 1; k <= p.necks_at(l); ++k) {
        if (a_free(l, k)) put(p.a[l - 1][k - 1]);
        if (k >= 2) put(p.b[l - 1][k - 1]);
        put(p.alpha[l - 1][k - 1]);
        put(p.beta[l - 1][k - 1]);
        x.push_back(p.r[l - 1][k - 1]);
      }
    return x;
  }

  SurfaceParams unpack(const std::vector<double>& x) const {
    SurfaceParams p = base;
    std::size_t i = 0;
    auto get = [&]() {
      Complex z(x[i], x[i + 1]);
      i += 2;
      return z;
    };
    for (int l = 1; l <= static_cast<int>(p.a.size()); ++l)
      for (int k = 1; k <= p.necks_at(l); ++k) {
        if (a_free(l, k)) p.a[l - 1][k - 1] = get();
        if (k >= 2) p.b[l - 1][k - 1] = get();
        p.alpha[l - 1][k - 1] = get();
        p.beta[l - 1][k - 1] = get();
        p.r[l - 1][k - 1] = x[i++];
      }
    for (std::size_t l = 0; l < p.a.size(); ++l) p.b[l][0] = std::conj(p.a[l][0]);
    const int L = p.plane_count();
    for (int l = 1; l <= L; ++l) {
      double in = 0.0, out = 0.0;
      if (l >= 2)
        for (double r : p.r[l - 2]) in += r;
      if (l <= L - 1)
        for (double r : p.r[l - 1]) out += r;
      p.R[l - 1] = in - out;
    }
    return p;
  }
};

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

RefineResult refine_params(const SurfaceParams& params, const RefineOptions& opt) {
  Packing pk{params};
  RefineResult res;
  std::vector<double> x = pk.pack(params);
  SurfaceParams cur = pk.unpack(x);
  std::vector<double> r = defect_vector(cur, opt.glue);
  res.params = cur;
  res.initial_norm = res.final_norm = norm(r);
  res.history.push_back(res.final_norm);
  if (res.initial_norm <= 1e-12) return res;

  auto eval = [&](const std::vector<double>& xx, std::vector<double>& out) {
    try {
      out = defect_vector(pk.unpack(xx), opt.glue);
      if (out.size() != r.size()) return false;
      for (double v : out)
        if (!std::isfinite(v)) return false;
      return true;
    } catch (const Error&) {
      return false;
    }
  };

  const int n = static_cast<int>(x.size());
  for (int step = 0; step < opt.max_steps; ++step) {
    const int m = static_cast<int>(r.size());
    Eigen::MatrixXd J(m, n);
    for (int j = 0; j < n; ++j) {
      std::vector<double> xp = x, rp;
      double h = opt.fd_step * std::max(1.0, std::abs(x[j]));
      xp[j] += h;
      if (!eval(xp, rp)) {
        xp[j] = x[j] - h;
        if (!eval(xp, rp)) throw Error(ErrorKind::SingularJacobian, "defects undefined near the parameters");
        h = -h;
      }
      for (int i = 0; i < m; ++i) J(i, j) = (rp[i] - r[i]) / h;
    }
    if (!J.allFinite() || J.norm() == 0.0) throw Error(ErrorKind::SingularJacobian, "degenerate defect Jacobian");
    Eigen::VectorXd rv = Eigen::Map<const Eigen::VectorXd>(r.data(), m);
    // minimum-norm least squares step; near-null directions are dropped
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    Eigen::VectorXd delta = svd.solve(-rv);
    bool accepted = false;
    for (double damp = 1.0; damp >= 1.0 / 1024 && !accepted; damp *= 0.5) {
      std::vector<double> xt = x, rt;
      for (int j = 0; j < n; ++j) xt[j] += damp * delta[j];
      if (eval(xt, rt) && norm(rt) < norm(r)) {
        x = xt;
        r = rt;
        accepted = true;
      }
    }
    if (!accepted) {
      if (step == 0)
        throw Error(ErrorKind::NoImprovement, "no damped step reduces the defect", res.initial_norm);
      break;
    }
    res.steps = step + 1;
    res.history.push_back(norm(r));
  }
  res.params = pk.unpack(x);
  res.final_norm = norm(r);
  return res;
}

}  // namespace maxface
