#include "magdisk/roots.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "magdisk/errors.hpp"

namespace magdisk::roots {

double brent(const std::function<double(double)>& f, Bracket br, double rel_tol, double abs_tol, int max_iter) {
  double a = br.lo, b = br.hi, fa = br.f_lo, fb = br.f_hi;
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0)) {
    throw Error(ErrorCode::BracketFailure, "brent: endpoints do not bracket a root");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double c = a, fc = fa, d = b - a, e = d;
  for (int iter = 0; iter < max_iter; ++iter) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * eps * std::abs(b) + 0.5 * (abs_tol + rel_tol * std::abs(b));
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;
    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (m > 0 ? tol : -tol);
    fb = f(b);
  }
  throw Error(ErrorCode::NonConvergence, "brent: iteration cap reached");
}

bool scan_for_sign_change(const std::function<double(double)>& f, double start, double step, double limit,
                          Bracket& out) {
  double x0 = start, f0 = f(x0);
  if (f0 == 0.0) {
    out = {x0, x0, f0, f0};
    return true;
  }
  const bool up = step > 0;
  while (up ? x0 < limit : x0 > limit) {
    double x1 = x0 + step;
    if (up ? x1 > limit : x1 < limit) x1 = limit;
    const double f1 = f(x1);
    if (f1 == 0.0 || (f1 > 0) != (f0 > 0)) {
      out = up ? Bracket{x0, x1, f0, f1} : Bracket{x1, x0, f1, f0};
      return true;
    }
    x0 = x1;
    f0 = f1;
  }
  return false;
}

Minimum golden_section(const std::function<double(double)>& f, double a, double b, double x_tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > x_tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? Minimum{x1, f1} : Minimum{x2, f2};
}

}  // namespace magdisk::roots
