#include "maxface/identities.hpp"

namespace maxface {

using boost::multiprecision::cpp_int;

namespace {

cpp_int factorial(int n) {
  cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

cpp_int choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// x (x-1) ... (x-j+1)
cpp_int falling(int x, int j) {
  cpp_int f = 1;
  for (int i = 0; i < j; ++i) f *= (x - i);
  return f;
}

}  // namespace

Rational identity1(int m, int n, int l) {
  Rational s = 0;
  for (int j = 0; j <= l; ++j)
    s += Rational(choose(m, j) * falling(n + 1, j) * choose(m - j, l - j) * falling(-2 * n - 2, l - j));
  return s / Rational(factorial(m));
}

bool identity1_in_domain(int m, int n, int l) {
  return m >= 2 && n >= -m && n <= -2 && l >= -n - 1 && l <= m;
}

Rational identity1_closed_form(int m, int n, int l) {
  if (l == -n - 1) return Rational(1) / Rational(factorial(m + n + 1));
  return 0;
}

Rational identity2(int m) {
  Rational s = 0;
  for (int j = 0; j <= m; ++j) s += Rational(choose(m, j) * falling(-m, j) * falling(2 * m, m - j));
  return s / Rational(factorial(m));
}

}  // namespace maxface
