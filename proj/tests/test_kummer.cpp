#include <doctest.h>

#include <cmath>

#include "magdisk/disk_spectrum.hpp"
#include "magdisk/errors.hpp"
#include "magdisk/kummer.hpp"
#include "magdisk/scaled_real.hpp"
#include "oracles.hpp"

using namespace magdisk;

TEST_CASE("scaled reals survive magnitudes far outside double range") {
  const ScaledReal big = ScaledReal::from_log(5e5);
  const ScaledReal q = (big * big) / big;
  CHECK(q.log_mag() == doctest::Approx(5e5).epsilon(1e-15));
  CHECK(ratio(big, big) == 1.0);
  CHECK(ScaledReal::zero().is_zero());
  CHECK(std::isinf(ScaledReal::zero().log_mag()));
  CHECK((ScaledReal::from_double(3.0) - ScaledReal::from_double(3.0)).is_zero());
  CHECK((ScaledReal::from_double(-2.5) + ScaledReal::from_double(1.0)).to_double() == doctest::Approx(-1.5));
}

TEST_CASE("M(a, b, 0) = 1 for series, integral and ratio") {
  CHECK(kummer_m({0.3, 2.0, 0.0}).to_double() == 1.0);
  CHECK(kummer_m_integral({0.3, 2.0, 0.0}).to_double() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(kummer_ratio_shift_b({0.7, 4.0, 0.0}) == 1.0);
  const auto [r1, r2] = check_recurrences({0.3, 2.0, 0.0});
  CHECK(r1 == 0.0);
  CHECK(r2 == 0.0);
}

TEST_CASE("series agrees with an exact rational sum") {
  using boost::multiprecision::cpp_rational;
  const double exact = oracle::kummer_rational(cpp_rational(1, 2), cpp_rational(2), cpp_rational(10), 200);
  CHECK(kummer_m({0.5, 2.0, 10.0}).to_double() == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("series agrees with the Euler integral") {
  struct Case { double a, b, z, tol; };
  for (const Case& c : {Case{0.25, 1.0, 1.0, 1e-13}, Case{0.25, 1.5, 5.0, 1e-11}, Case{0.4, 3.0, 100.0, 1e-10},
                        Case{0.45, 11.0, 450.0, 1e-10}, Case{0.05, 1.0, 500.0, 1e-10}, Case{0.9, 20.0, 250.0, 1e-10}}) {
    CAPTURE(c.a); CAPTURE(c.b); CAPTURE(c.z);
    CHECK(relative_difference(kummer_m({c.a, c.b, c.z}), kummer_m_integral({c.a, c.b, c.z})) < c.tol);
  }
}

TEST_CASE("ratio matches separate scaled evaluations") {
  const KummerArgs args{0.2, 1.0, 2.0};
  const double separate = ratio(kummer_m({1.2, 2.0, 2.0}), kummer_m(args));
  CHECK(kummer_ratio_shift_b(args) == doctest::Approx(separate).epsilon(1e-14));
}

TEST_CASE("ratio zeroes the Neumann residual at the first crossing") {
  const double beta0 = 3.847538710016439, eta0 = 0.46188467750410933;
  const double nu = 0.5 * (1 - eta0), x = 0.5 * beta0;
  const double r = kummer_ratio_shift_b({nu, 1.0, x});
  CHECK(std::abs((0 - x) + 2 * nu * x * r) < 1e-10);
}

TEST_CASE("contiguous relations hold on a property grid") {
  for (double a : {0.05, 0.27, 0.5, 0.93}) {
    for (int b = 1; b <= 20; b += 3) {
      for (double z : {0.0, 0.7, 5.0, 60.0, 200.0, 450.0}) {
        const auto [r1, r2] = check_recurrences({a, static_cast<double>(b), z});
        CAPTURE(a); CAPTURE(b); CAPTURE(z);
        CHECK(r1 < 1e-10);
        CHECK(r2 < 1e-10);
      }
    }
  }
  const auto [s1, s2] = check_recurrences({0.3, 2.0, 5.0});
  CHECK(s1 < 1e-12);
  CHECK(s2 < 1e-12);
}

TEST_CASE("d/dz M(a,b,z) = (a/b) M(a+1,b+1,z)") {
  for (double z : {0.5, 3.0, 40.0, 300.0}) {
    const double a = 0.31, b = 4.0, h = 1e-5 * std::max(1.0, z);
    // difference of logs keeps the numbers O(1) at large z
    const double lp = kummer_m({a, b, z + h}).log_mag(), lm = kummer_m({a, b, z - h}).log_mag();
    const double l0 = kummer_m({a, b, z}).log_mag();
    const double fd = (std::exp(lp - l0) - std::exp(lm - l0)) / (2 * h);
    const double exact = a / b * std::exp(kummer_m({a + 1, b + 1, z}).log_mag() - l0);
    CAPTURE(z);
    CHECK(fd == doctest::Approx(exact).epsilon(1e-6));
  }
}

TEST_CASE("M is strictly increasing in z for positive parameters") {
  double prev = -1;
  for (double z = 0; z <= 400; z += 12.5) {
    const double l = kummer_m({0.2, 3.0, z}).log_mag();
    CHECK(l > prev);
    prev = l;
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(kummer_m({0.3, -2.0, 1.0}), Error);
  CHECK_THROWS_AS(kummer_m({0.3, 0.0, 1.0}), Error);
  CHECK_THROWS_AS(kummer_m_integral({2.0, 1.5, 1.0}), Error);
  CHECK_THROWS_AS(kummer_m_integral({-0.1, 1.5, 1.0}), Error);
  SolverConfig tight;
  tight.max_terms = 10;
  try {
    kummer_m({0.4, 1.0, 300.0}, tight);
    FAIL("expected NonConvergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonConvergence);
  }
}
