#pragma once

// Brute-force reference computations that share no code with the library.

#include <cmath>
#include <functional>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

// J_n(x) from the ascending series sum_k (-1)^k (x/2)^{2k+n} / (k! (k+n)!).
inline long double bessel_j_series(int n, long double x) {
  if (n < 0) return (n % 2 ? -1 : 1) * bessel_j_series(-n, x);
  long double term = 1.0L;
  for (int k = 1; k <= n; ++k) term *= x / 2.0L / k;
  long double sum = term;
  const long double q = -(x * x) / 4.0L;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * (k + n));
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum)) break;
  }
  return sum;
}

inline long double bessel_j_prime_series(int n, long double x) {
  return 0.5L * (bessel_j_series(n - 1, x) - bessel_j_series(n + 1, x));
}

// First positive zero of J_n' by bisection from a sign change on a fine scan.
inline double first_j_prime_zero(int n) {
  long double lo = n == 0 ? 0.1L : 1e-3L;
  long double step = 1e-2L;
  long double f_lo = bessel_j_prime_series(n, lo);
  long double hi = lo + step;
  while (bessel_j_prime_series(n, hi) * f_lo > 0) {
    lo = hi;
    hi += step;
  }
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (bessel_j_prime_series(n, mid) * f_lo > 0) lo = mid; else hi = mid;
  }
  return static_cast<double>(0.5L * (lo + hi));
}

// M(a, b, z) with rational a, b, z summed exactly over `terms` terms.
inline double kummer_rational(boost::multiprecision::cpp_rational a, boost::multiprecision::cpp_rational b,
                              boost::multiprecision::cpp_rational z, int terms) {
  using boost::multiprecision::cpp_rational;
  cpp_rational term = 1, sum = 1;
  for (int k = 0; k < terms; ++k) {
    term *= (a + k) * z / ((b + k) * (k + 1));
    sum += term;
  }
  return static_cast<double>(sum);
}

// Ground energy of -u'' + (t + xi)^2 u on R+ with u'(0) = 0, by RK4 shooting
// from t = 0 to T and bisection on the sign of u(T): below the eigenvalue
// the solution stays positive, above it crosses zero.
inline double degennes_shooting(double xi, double T = 9.0, int steps = 20000) {
  auto final_value = [&](double lambda) {
    const double h = T / steps;
    double u = 1.0, v = 0.0;
    auto acc = [&](double t, double uu) { return ((t + xi) * (t + xi) - lambda) * uu; };
    for (int i = 0; i < steps; ++i) {
      const double t = i * h;
      const double k1u = v, k1v = acc(t, u);
      const double k2u = v + 0.5 * h * k1v, k2v = acc(t + 0.5 * h, u + 0.5 * h * k1u);
      const double k3u = v + 0.5 * h * k2v, k3v = acc(t + 0.5 * h, u + 0.5 * h * k2u);
      const double k4u = v + h * k3v, k4v = acc(t + h, u + h * k3u);
      u += h / 6.0 * (k1u + 2 * k2u + 2 * k3u + k4u);
      v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
      if (u < 0) return -1.0;
    }
    return 1.0;
  };
  double lo = 0.0, hi = 3.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (final_value(mid) > 0) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle
