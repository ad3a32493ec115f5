#include "maxface/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "maxface/error.hpp"

namespace maxface {

Triple& Triple::operator+=(const Triple& o) {
  inv_g_dh += o.inv_g_dh;
  g_dh += o.g_dh;
  dh += o.dh;
  return *this;
}

Triple Triple::operator+(const Triple& o) const {
  Triple r = *this;
  return r += o;
}

Triple Triple::operator-(const Triple& o) const {
  return {inv_g_dh - o.inv_g_dh, g_dh - o.g_dh, dh - o.dh};
}

Triple Triple::operator*(std::complex<double> s) const {
  return {inv_g_dh * s, g_dh * s, dh * s};
}

double Triple::norm() const {
  return std::max({std::abs(inv_g_dh), std::abs(g_dh), std::abs(dh)});
}

std::array<double, 3> Triple::position() const {
  const std::complex<double> I(0.0, 1.0);
  return {std::real(0.5 * (inv_g_dh + g_dh)), std::real(0.5 * I * (inv_g_dh - g_dh)),
          std::real(dh)};
}

std::complex<double> Triple::horizontal() const { return std::conj(inv_g_dh) + g_dh; }

namespace {

constexpr double xk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                          0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                          0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                          0.207784955007898467600689403773245, 0.0};
constexpr double wk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                          0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                          0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                          0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// mass = Kronrod estimate of the integral of |f|; sets the roundoff floor
void gk15(const std::function<Triple(double)>& f, double a, double b, Triple& kron, double& err,
          double* mass = nullptr) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Triple fc = f(c);
  Triple k = fc * wk[7], g = fc * wg[3];
  double m = fc.norm() * wk[7];
  for (int j = 0; j < 7; ++j) {
    Triple lo = f(c - h * xk[j]), hi = f(c + h * xk[j]);
    Triple s = lo + hi;
    k += s * wk[j];
    m += (lo.norm() + hi.norm()) * wk[j];
    if (j % 2 == 1) g += s * wg[j / 2];
  }
  kron = k * h;
  err = ((k - g) * h).norm();
  if (mass) *mass = m * std::abs(h);
}

Triple recurse(const std::function<Triple(double)>& f, double a, double b, const Triple& whole,
               double err, double tol, int depth, int max_depth) {
  if (err <= tol || depth >= max_depth) {
    if (err > tol && depth >= max_depth && !(err <= 1e3 * tol))
      throw Error(ErrorKind::NoConvergence, "quadrature did not converge", err);
    return whole;
  }
  double m = 0.5 * (a + b);
  Triple l, r;
  double el, er;
  gk15(f, a, m, l, el);
  gk15(f, m, b, r, er);
  (void)whole;
  return recurse(f, a, m, l, el, 0.5 * tol, depth + 1, max_depth) +
         recurse(f, m, b, r, er, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

Triple integrate(const std::function<Triple(double)>& f, double a, double b,
                 const QuadratureOptions& opt) {
  Triple whole;
  double err, mass;
  gk15(f, a, b, whole, err, &mass);
  double tol = std::max(opt.abs_tol, opt.rel_tol * mass);
  return recurse(f, a, b, whole, err, tol, 0, opt.max_depth);
}

Triple integrate_periodic(const std::function<Triple(double)>& f, int points) {
  Triple s;
  for (int j = 0; j < points; ++j) s += f(static_cast<double>(j) / points);
  return s * (1.0 / points);
}

}  // namespace maxface
