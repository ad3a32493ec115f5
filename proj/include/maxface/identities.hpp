#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace maxface {

using Rational = boost::multiprecision::cpp_rational;

// sum_{j=0}^{l} C(m,j) (n+1)_j / m! * C(m-j, l-j) (-2n-2)_{l-j}, descending factorials.
Rational identity1(int m, int n, int l);
// Closed form: 1/(m+n+1)! at l = -n-1, 0 for -n-1 < l <= m.
Rational identity1_closed_form(int m, int n, int l);
bool identity1_in_domain(int m, int n, int l);

// sum_{j=0}^{m} C(m,j) (-m)_j (2m)_{m-j} / m!  (equals 1)
Rational identity2(int m);

}  // namespace maxface
