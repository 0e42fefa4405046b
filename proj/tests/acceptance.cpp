// One line per acceptance criterion; exit status 1 when any of them fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "magdisk/asymptotics.hpp"
#include "magdisk/degennes.hpp"
#include "magdisk/diamagnetism.hpp"
#include "magdisk/disk_spectrum.hpp"
#include "magdisk/fd_oracle.hpp"
#include "magdisk/intersections.hpp"
#include "magdisk/kummer.hpp"
#include "magdisk/report.hpp"

using namespace magdisk;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Shared {
  std::vector<CrossingPoint> crossings;  // n = 0..401
  DeGennesConstants constants;
};

// reference crossing values
struct Row { int n; double beta, eta; };
const Row kCrossings[] = {
    {0, 3.847538710016439, 0.46188467750410933},   {1, 6.784689992385673, 0.490953836999826},
    {2, 9.495696565685895, 0.5057893193465876},    {3, 12.091164794355297, 0.5152514126454681},
    {4, 14.613601105384173, 0.5219883372745205},   {5, 17.08457097842645, 0.5271130898896494},
    {10, 28.989490930878333, 0.5418512305407657},  {25, 62.88412636538398, 0.55750340973811},
    {50, 117.3339755112376, 0.5663294771262841},   {100, 223.66235051600012, 0.5729419029706077},
    {200, 432.6371167436942, 0.5777978340023635},  {300, 639.5318373766472, 0.5799955549150178},
    {400, 845.3470994716895, 0.5813189732301576}};

Outcome crossing_values(const Shared&) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  for (const Row& r : kCrossings) {
    const CrossingPoint c = crossing_by_system(r.n);
    worst = std::max({worst, rel(c.beta_n, r.beta), rel(c.eta_star, r.eta)});
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(worst < 1e-9, "relative error above 1e-9");
  o.require(secs < 120, "runtime above 2 minutes");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("max rel error %.2e in %.2f s", worst, secs);
  return o;
}

Outcome saint_james(const Shared& s) {
  Outcome o;
  double w1 = 0, w2 = 0;
  for (std::size_t i = 0; i + 1 < s.crossings.size(); ++i) {
    const CrossingPoint& c = s.crossings[i];
    w1 = std::max(w1, std::abs(c.beta_n - saint_james_beta(c.n, c.eta_star)) / c.beta_n);
    w2 = std::max(w2, std::abs(std::pow(c.beta_n - (2 * c.n + 1), 2) - (4 * c.lambda_star + 1)));
  }
  o.require(w1 < 1e-10, "beta residual");
  o.require(w2 < 1e-8, "quadratic residual");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("max |beta - SJ|/beta %.2e, max quadratic residual %.2e", w1, w2);
  return o;
}

Outcome triangulation(const Shared&) {
  Outcome o;
  double worst = 0;
  for (int n = 0; n <= 50; ++n) {
    const double a = crossing_by_curves(n).beta_n, b = crossing_by_system(n).beta_n, c = crossing_by_phi(n).beta_n;
    worst = std::max({worst, rel(a, b), rel(a, c), rel(b, c)});
  }
  o.require(worst < 1e-10, "methods disagree");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("max pairwise rel difference %.2e", worst);
  return o;
}

Outcome constants(const Shared& s) {
  Outcome o;
  const DeGennesConstants& c = s.constants;
  o.require(std::abs(c.theta0 - 0.590106) <= 1e-5, "theta0");
  o.require(std::abs(c.xi0 + 0.768) <= 1e-3, "xi0");
  o.require(std::abs(c.c1 - 0.254) <= 1e-3, "C1");
  o.require(std::abs(c.delta0_fit - 0.0975) <= 2e-3, fmt("delta0 fit %.6f vs 0.0975", c.delta0_fit));
  o.require(std::abs(c.delta0_formula - 0.0975) <= 2e-3, fmt("delta0 formula %.6f vs 0.0975", c.delta0_formula));
  o.require(std::abs(c.theta0 - c.xi0 * c.xi0) <= 1e-5, "theta0 - xi0^2");
  o.detail += (o.detail.empty() ? "" : "; ") +
              fmt("theta0 %.8f xi0 %.8f C1 %.8f", c.theta0, c.xi0, c.c1) +
              fmt(" theta0-xi0^2 %.1e", c.theta0 - c.xi0 * c.xi0);
  return o;
}

Outcome gap_sequence(const Shared& s) {
  Outcome o;
  const std::vector<CrossingPoint> upto400(s.crossings.begin(), s.crossings.begin() + 401);
  const HalfPowerSequence g = gamma_sequence(upto400);
  HalfPowerSequence from1;
  for (const auto& [n, v] : g.values) if (n >= 1) from1.push(n, v);
  const double r24 = *richardson(from1, 4).at(24);
  bool decreasing = true;
  for (int n = 1; n < 399; ++n) decreasing = decreasing && *g.at(n + 1) < *g.at(n);
  o.require(std::abs(*g.at(0) - 2.9371512823692343) <= 1e-10, "gamma0");
  o.require(std::abs(r24 - 2.0000068128960815) <= 1e-8, "R4 gamma24");
  o.require(decreasing, "gamma not decreasing");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("gamma0 %.16g, R4 gamma24 %.16g", *g.at(0), r24);
  return o;
}

Outcome crossing_derivatives(const Shared& s) {
  Outcome o;
  const double beta0 = s.crossings[0].beta_n;
  const double d0 = lambda_prime(0, beta0).dlambda, d1 = lambda_prime(1, beta0).dlambda;
  const std::vector<CrossingPoint> upto400(s.crossings.begin(), s.crossings.begin() + 401);
  const DerivativeLimits lim = derivative_limits_check(upto400, s.constants);
  const double l = *lim.left_r4.at(25), r = *lim.right_r4.at(25);
  const double spread = 1.5 * s.constants.c1 * std::abs(s.constants.xi0);
  o.require(std::abs(d0 - 0.884743) <= 1e-5, "lambda'(0, beta0)");
  o.require(std::abs(d1 - 0.144907) <= 1e-5, "lambda'(1, beta0)");
  o.require(std::abs(l - 0.882863) <= 1e-5, "R4 left vs table");
  o.require(std::abs(r - 0.297350) <= 1e-5, "R4 right vs table");
  o.require(std::abs(l - (s.constants.theta0 + spread)) <= 2e-3, "R4 left vs theta0 + spread");
  o.require(std::abs(r - (s.constants.theta0 - spread)) <= 2e-3, "R4 right vs theta0 - spread");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("%.6f %.6f", d0, d1) + fmt(" R4 %.6f %.6f", l, r);
  return o;
}

Outcome oracles(const Shared&) {
  Outcome o;
  double worst = 0, gap = 0;
  for (int n : {0, 1, 2, 5, 10}) {
    for (double beta : {1.0, 5.0, 10.0, 30.0, 100.0}) {
      const double k = lowest_eigenvalue(n, beta).lambda;
      const double f = fd::fd_disk_eigen(n, beta, {0.0, 1.0, 4001}).lambda;
      worst = std::max(worst, rel(f, k));
    }
  }
  for (int n = 0; n <= 10; ++n)
    for (double beta : {1.0, 5.0, 10.0, 30.0}) gap = std::max(gap, lambda_prime(n, beta).fh_vs_fd_gap);
  o.require(worst < 1e-6, "Kummer vs FD");
  o.require(gap < 1e-5, "derivative formula vs central difference");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("max rel FD gap %.2e, max derivative gap %.2e", worst, gap);
  return o;
}

// d/dz of the exact rational series, sum_k k t_k / z
double rational_series_derivative(int a_num, int a_den, int b, int z, int terms) {
  using boost::multiprecision::cpp_rational;
  const cpp_rational a(a_num, a_den);
  cpp_rational term = 1, sum = 0;
  for (int k = 0; k < terms; ++k) {
    term *= (a + k) * cpp_rational(z) / ((cpp_rational(b) + k) * (k + 1));
    sum += cpp_rational(k + 1) * term;
  }
  return static_cast<double>(sum / z);
}

Outcome properties(const Shared& s) {
  Outcome o;
  double rec = 0;
  for (double a : {0.05, 0.27, 0.5, 0.93})
    for (int b = 1; b <= 20; b += 3)
      for (double z : {0.0, 0.7, 5.0, 60.0, 200.0, 450.0}) {
        const auto [r1, r2] = check_recurrences({a, static_cast<double>(b), z});
        rec = std::max({rec, r1, r2});
      }
  o.require(rec < 1e-10, "contiguous relations");

  double deriv = 0;
  for (int z : {1, 3, 10}) {
    const double exact = rational_series_derivative(1, 3, 4, z, 160);
    const double lib = (1.0 / 3.0) / 4.0 * kummer_m({1.0 / 3.0 + 1, 5.0, static_cast<double>(z)}).to_double();
    deriv = std::max(deriv, rel(lib, exact));
  }
  o.require(deriv < 1e-10, "derivative identity");

  double integral = 0;
  for (auto [a, b, z] : {std::tuple{0.25, 1.0, 1.0}, {0.4, 3.0, 100.0}, {0.45, 11.0, 450.0}, {0.9, 20.0, 250.0}}) {
    const ScaledReal m = kummer_m({a, b, z}), q = kummer_m_integral({a, b, z});
    integral = std::max(integral, std::abs(std::expm1(q.log_mag() - m.log_mag())));
  }
  o.require(integral < 1e-10, "integral representation");

  bool signs = true;
  for (std::size_t i = 0; i + 1 < s.crossings.size(); ++i) {
    const InterlacingSigns g = interlacing_check(s.crossings[i]);
    signs = signs && g.left > 0 && g.right < 0;
  }
  o.require(signs, "interlacing signs");

  bool negative = true;
  for (int n = 0; n <= 10; ++n)
    for (double beta : {1.0, 5.0, 10.0, 30.0})
      if (beta < 2 * n) negative = negative && lambda_prime(n, beta).dlambda < 0;
  o.require(negative, "lambda' < 0 below 2n");

  bool bound = true;
  for (double beta = 0.5; beta <= 60; beta += 0.5) bound = bound && lowest_eigenvalue(0, beta).lambda <= beta * beta / 8;
  o.require(bound, "lambda(0, beta) <= beta^2/8");

  const std::vector<double> grid = report::beta_grid_values({0.5, 900.0, 0.5});
  const ScanReport scan = conjecture_scan(grid, 400, s.crossings, s.constants);
  for (const ScanItem& it : scan.items) o.require(it.pass, "scan: " + it.name);
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("recurrences %.1e, derivative %.1e, integral %.1e", rec, deriv, integral);
  for (const ScanItem& it : scan.items) o.detail += fmt(", %.3g", it.value);
  return o;
}

Outcome coefficients(const Shared& s) {
  Outcome o;
  const std::vector<CrossingPoint> upto400(s.crossings.begin(), s.crossings.begin() + 401);
  const ExpansionReport eta = eta_star_expansion_check(upto400, s.constants);
  const ExpansionReport delta = delta_at_crossings_check(upto400, s.constants);
  const LimitCheck& sn = eta.checks.front();
  const LimitCheck& dn = delta.checks.front();
  o.require(std::abs(sn.extrapolated - s.constants.c1) <= 2e-3, "s_n limit");
  o.require(std::abs(dn.extrapolated - (s.constants.delta0_fit - 0.5)) <= 2e-3, "delta(n, beta_n) limit");

  HalfPowerSequence from1;
  for (const auto& [n, v] : gamma_sequence(upto400).values) if (n >= 1) from1.push(n, v);
  const HalfPowerSequence r4 = richardson(from1, 4);
  const int last = r4.values.back().first;
  const double slope = log_log_slope(r4, 2.0, last / 2, last);
  o.require(std::abs(slope + 2.5) <= 0.3, "R4 gamma slope");
  o.detail += (o.detail.empty() ? "" : "; ") + fmt("s_n -> %.6f, delta -> %.6f", sn.extrapolated, dn.extrapolated) +
              fmt(", slope %.3f over [%g, %g]", slope, last / 2, last);
  return o;
}

}  // namespace

int main() {
  Shared s;
  s.crossings = report::crossings_up_to(401, {});
  s.constants = compute_degennes_constants();

  const std::vector<std::pair<const char*, std::function<Outcome(const Shared&)>>> criteria{
      {"crossing values", crossing_values},        {"Saint-James exactness", saint_james},
      {"method triangulation", triangulation}, {"De Gennes constants", constants},
      {"gap sequence", gap_sequence},             {"crossing derivatives", crossing_derivatives},
      {"oracle equivalence", oracles},      {"property suites", properties},
      {"asymptotic coefficients", coefficients}};

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second(s);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("criterion %zu %-26s %s  %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
