#include "magdisk/bessel.hpp"

#include <cmath>

#include "magdisk/errors.hpp"
#include "magdisk/roots.hpp"

namespace magdisk {

double bessel_j_prime(int n, double x) {
  if (n == 0) return -std::cyl_bessel_j(1.0, x);
  return 0.5 * (std::cyl_bessel_j(n - 1.0, x) - std::cyl_bessel_j(n + 1.0, x));
}

double bessel_j_prime_zero(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidParams, "Bessel order must be >= 0");
  auto f = [n](double x) { return bessel_j_prime(n, x); };
  // j'_{n,1} > n for n >= 1 and J_n' > 0 on (0, j'_{n,1}); for n = 0, J_0' < 0 on (0, 3.83).
  const double start = n == 0 ? 0.5 : std::max(0.5, static_cast<double>(n));
  roots::Bracket br{};
  if (!roots::scan_for_sign_change(f, start, 0.05, start + 4.0 * std::cbrt(n + 1.0) + 10.0, br)) {
    throw Error(ErrorCode::BracketFailure, "no zero of J_n' found");
  }
  return roots::brent(f, br, 0.0, 1e-15);
}

}  // namespace magdisk
