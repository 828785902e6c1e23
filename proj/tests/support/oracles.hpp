#pragma once

// Reference computations that share no code path with the library engines.

#include <boost/math/special_functions/bernoulli.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "qjones/exactpoly.hpp"

namespace qjones::oracle {

/// q^{N-1} sum_{n<N} q^{nN} (1 - q^{N-1})(1 - q^{N-2})...(1 - q^{N-n}) by direct expansion.
inline LaurentPoly trefoil_closed_form(int n) {
  LaurentPoly sum;
  LaurentPoly prod = 1;
  for (int k = 0; k < n; ++k) {
    if (k > 0) prod *= LaurentPoly(1) - LaurentPoly::q_power(n - k);
    sum += prod * LaurentPoly::q_power(static_cast<std::int64_t>(k) * n);
  }
  return sum * LaurentPoly::q_power(n - 1);
}

/// q sum_{n<N} (1 - q)...(1 - q^n) at q = exp(2 pi i / N), in complex doubles.
inline std::complex<double> kontsevich_zagier(int n) {
  const std::complex<double> q = std::polar(1.0, 2 * std::numbers::pi / n);
  std::complex<double> sum = 0.0, prod = 1.0, qk = 1.0;
  for (int k = 0; k < n; ++k) {
    if (k > 0) {
      qk *= q;
      prod *= 1.0 - qk;
    }
    sum += prod;
  }
  return q * sum;
}

/// sum_{n<N} prod_{k<=n} |1 - zeta^k|^2, the figure-eight Kashaev value.
inline double figure_eight_kashaev(int n) {
  double sum = 0, prod = 1;
  for (int k = 0; k < n; ++k) {
    if (k > 0) prod *= std::norm(1.0 - std::polar(1.0, 2 * std::numbers::pi * k / n));
    sum += prod;
  }
  return sum;
}

/// Lobachevsky function L(t) = -int_0^t ln|2 sin u| du = Cl_2(2t) / 2, from the
/// Bernoulli series Cl_2(x) = x - x ln|x| + sum |B_2k| x^{2k+1} / (2k (2k+1)!), |x| < 2 pi.
inline double lobachevsky(double t) {
  t = std::remainder(t, std::numbers::pi);  // odd, period pi
  if (t == 0) return 0;
  const double x = 2 * t;
  double s = x - x * std::log(std::abs(x));
  double power = x;      // x^{2k+1}
  double factorial = 1;  // (2k+1)!
  for (int k = 1; k <= 60; ++k) {
    power *= x * x;
    factorial *= (2.0 * k) * (2.0 * k + 1);
    s += std::abs(boost::math::bernoulli_b2n<double>(k)) * power / (2.0 * k * factorial);
  }
  return s / 2;
}

/// Volume of an ideal tetrahedron with shape z: L(arg z) + L(arg 1/(1-z)) + L(arg (1 - 1/z)).
inline double ideal_tetrahedron_volume(std::complex<double> z) {
  return lobachevsky(std::arg(z)) + lobachevsky(std::arg(1.0 / (1.0 - z))) + lobachevsky(std::arg(1.0 - 1.0 / z));
}

/// Two regular ideal tetrahedra.
inline double figure_eight_volume() { return 2 * ideal_tetrahedron_volume(std::polar(1.0, std::numbers::pi / 3)); }

/// Three tetrahedra of shape z, z^3 - z^2 + 1 = 0, Im z > 0.
inline double five_two_volume() {
  std::complex<double> z(0.9, 0.7);
  for (int i = 0; i < 60; ++i) z -= (z * z * z - z * z + 1.0) / (3.0 * z * z - 2.0 * z);
  return 3 * ideal_tetrahedron_volume(z);
}

/// Roots of a z^2 + b z + c by the quadratic formula.
inline std::pair<std::complex<double>, std::complex<double>> quadratic_roots(double a, double b, double c) {
  const std::complex<double> disc = std::sqrt(std::complex<double>(b * b - 4 * a * c));
  return {(-b + disc) / (2 * a), (-b - disc) / (2 * a)};
}

}  // namespace qjones::oracle
