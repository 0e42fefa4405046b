#include <doctest.h>

#include <cmath>

#include "magdisk/disk_spectrum.hpp"
#include "magdisk/errors.hpp"
#include "magdisk/fd_oracle.hpp"
#include "oracles.hpp"

using namespace magdisk;

TEST_CASE("free Neumann disk has a zero mode with constant eigenvector") {
  const fd::FdResult r = fd::fd_disk_eigen(0, 0.0, {0.0, 1.0, 201});
  CHECK(std::abs(r.lambda) < 1e-10);
  CHECK((r.eigvec.array() - r.eigvec[0]).abs().maxCoeff() < 1e-8);
}

TEST_CASE("FD approaches the Bessel zero for n = 1") {
  const double j = oracle::first_j_prime_zero(1);
  const fd::FdResult r = fd::fd_disk_eigen(1, 0.0, {0.0, 1.0, 2001});
  CHECK(r.lambda == doctest::Approx(j * j).epsilon(1e-6));
}

TEST_CASE("FD eigenvalue ratio at the first crossing") {
  const double beta = 3.8475387;
  const fd::FdResult r = fd::fd_disk_eigen(0, beta, {0.0, 1.0, 4001});
  CHECK(std::abs(r.lambda / beta - 0.4618847) < 1e-5);
}

TEST_CASE("second-order convergence and positivity") {
  const double e1 = fd::fd_disk_eigen(2, 10.0, {0.0, 1.0, 201}).lambda_coarse;
  const double e2 = fd::fd_disk_eigen(2, 10.0, {0.0, 1.0, 401}).lambda_coarse;
  const double e3 = fd::fd_disk_eigen(2, 10.0, {0.0, 1.0, 801}).lambda_coarse;
  CHECK((e1 - e2) / (e2 - e3) == doctest::Approx(4.0).epsilon(0.05));
  const fd::FdResult r = fd::fd_disk_eigen(3, 30.0, {0.0, 1.0, 801});
  CHECK(r.eigvec.tail(800).minCoeff() > 0);
}

TEST_CASE("half-line oracle limits") {
  const fd::FdResult deep = fd::fd_degennes_eigen(-10.0, 25.0, {0.0, 25.0, 8001});
  CHECK(std::abs(deep.lambda - 1.0) < 1e-4);

  const double shoot = oracle::degennes_shooting(0.0);
  const fd::FdResult zero = fd::fd_degennes_eigen(0.0, 15.0, {0.0, 15.0, 8001});
  CHECK(zero.lambda == doctest::Approx(shoot).epsilon(1e-8));
  const double shoot2 = oracle::degennes_shooting(-0.5);
  CHECK(fd::fd_degennes_eigen(-0.5, 15.0, {0.0, 15.0, 8001}).lambda == doctest::Approx(shoot2).epsilon(1e-8));

  const fd::FdResult mid = fd::fd_degennes_eigen(-0.768, 15.0, {0.0, 15.0, 8001});
  CHECK(std::abs(mid.lambda - 0.590106) < 1e-5);
  CHECK_FALSE(mid.truncation_warning);
  CHECK(mid.eigvec.head(8000).minCoeff() > 0);
}

TEST_CASE("half-line eigenvalue is insensitive to the truncation length") {
  const double h = 15.0 / 8000;
  const double a = fd::fd_degennes_eigen(-0.768, 15.0, {0.0, 15.0, 8001}).lambda;
  const double b = fd::fd_degennes_eigen(-0.768, 20.0, {0.0, 20.0, static_cast<int>(std::lround(20.0 / h)) + 1}).lambda;
  CHECK(std::abs(a - b) < 1e-10);
}

TEST_CASE("truncation guard and warning") {
  CHECK_THROWS_AS(fd::fd_degennes_eigen(-5.0, 10.0, {0.0, 10.0, 1001}), Error);
  CHECK(fd::fd_degennes_eigen(-3.0, 11.0, {0.0, 11.0, 1001}).truncation_warning == false);
}

TEST_CASE("FD agrees with the Kummer eigenvalues") {
  for (int n : {0, 1, 2, 5, 10}) {
    for (double beta : {1.0, 5.0, 10.0, 30.0, 100.0}) {
      const double k = lowest_eigenvalue(n, beta).lambda;
      const double f = fd::fd_disk_eigen(n, beta, {0.0, 1.0, 4001}).lambda;
      CAPTURE(n); CAPTURE(beta);
      CHECK(std::abs(f - k) / k < 1e-6);
    }
  }
}
