#include <doctest.h>

#include <cmath>

#include "magdisk/diamagnetism.hpp"
#include "magdisk/disk_spectrum.hpp"
#include "magdisk/errors.hpp"
#include "shared.hpp"

using namespace magdisk;

TEST_CASE("derivatives at the first crossing") {
  const double beta0 = shared_crossings()[0].beta_n;
  CHECK(std::abs(lambda_prime(0, beta0).dlambda - 0.884743) < 1e-5);
  CHECK(std::abs(lambda_prime(1, beta0).dlambda - 0.144907) < 1e-5);
  CHECK(lambda_prime(3, 5.0).dlambda < 0);
}

TEST_CASE("boundary-trace formula agrees with central differences") {
  for (int n = 0; n <= 10; ++n) {
    for (double beta : {1.0, 5.0, 10.0, 30.0}) {
      const DerivativeRecord r = lambda_prime(n, beta);
      CAPTURE(n); CAPTURE(beta);
      CHECK(r.fh_vs_fd_gap < 1e-5);
      if (beta < 2 * n) CHECK(r.dlambda < 0);
    }
  }
}

TEST_CASE("one-sided derivatives") {
  const auto& cs = shared_crossings();
  const OneSided d25 = one_sided_derivatives(cs[25]);
  CHECK(std::abs(d25.left - 0.880145) < 1e-5);
  CHECK(std::abs(d25.right - 0.256706) < 1e-5);
  const OneSided d400 = one_sided_derivatives(cs[400]);
  CHECK(std::abs(d400.left - 0.881993) < 1e-5);
  CHECK(std::abs(d400.right - 0.286222) < 1e-5);
  for (int n = 0; n <= 400; n += 7) {
    const OneSided d = one_sided_derivatives(cs[n]);
    CHECK(d.left > d.right);
  }
}

TEST_CASE("eta(0, .) is increasing and eta(n, .) has a single minimum") {
  for (double beta = 0.5; beta < 40; beta += 1.5) CHECK(eta_prime(0, beta) > 0);
  for (int n : {1, 4}) {
    int changes = 0;
    double prev = eta_prime(n, 0.5);
    for (double beta = 0.75; beta < 60; beta += 0.25) {
      const double d = eta_prime(n, beta);
      if ((d > 0) != (prev > 0)) ++changes;
      prev = d;
    }
    CHECK(changes == 1);
  }
}

TEST_CASE("conjecture scan on a short range") {
  const auto& cs = shared_crossings();
  std::vector<double> grid;
  for (double b = 0.5; b <= 60; b += 0.5) grid.push_back(b);
  const ScanReport r = conjecture_scan(grid, 20, cs, shared_constants());
  REQUIRE(r.items.size() == 4);
  CHECK(r.all_pass());
  // eta(beta) on (0, beta_0] is bounded by eta*_0
  for (double b = 0.25; b <= cs[0].beta_n; b += 0.25) CHECK(ground_state(b).point.eta <= cs[0].eta_star + 1e-12);
  CHECK_THROWS_AS(conjecture_scan(grid, 500, cs, shared_constants()), Error);
}

TEST_CASE("derivative limits") {
  const auto& cs = shared_crossings();
  const std::vector<CrossingPoint> upto400(cs.begin(), cs.begin() + 401);
  const DerivativeLimits d = derivative_limits_check(upto400, shared_constants());
  CHECK(std::abs(*d.left_r4.at(25) - 0.882863) < 1e-5);
  CHECK(std::abs(*d.right_r4.at(25) - 0.297350) < 1e-5);
  CHECK(d.left_check.pass);
  CHECK(d.right_check.pass);
  const std::vector<CrossingPoint> few(cs.begin(), cs.begin() + 10);
  CHECK_THROWS_AS(derivative_limits_check(few, shared_constants()), Error);
}
