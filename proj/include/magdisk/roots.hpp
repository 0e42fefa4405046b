#pragma once

#include <functional>

namespace magdisk::roots {

struct Bracket {
  double lo, hi;
  double f_lo, f_hi;
};

// Brent's method on a sign-changing bracket. Stops when the bracket width
// drops below 2*eps*|x| + abs_tol + rel_tol*|x|, or on an exact zero.
double brent(const std::function<double(double)>& f, Bracket bracket, double rel_tol, double abs_tol = 0.0,
             int max_iter = 200);

// Walks x = start, start+step, ... (step may be negative) until f changes sign
// or `limit` is passed; returns false when no sign change was seen.
bool scan_for_sign_change(const std::function<double(double)>& f, double start, double step, double limit,
                          Bracket& out);

struct Minimum {
  double x;
  double f;
};

// Golden-section search for a minimum of a unimodal f on [a, b].
Minimum golden_section(const std::function<double(double)>& f, double a, double b, double x_tol);

}  // namespace magdisk::roots
