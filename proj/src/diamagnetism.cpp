#include "magdisk/diamagnetism.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "magdisk/disk_spectrum.hpp"
#include "magdisk/errors.hpp"
#include "magdisk/roots.hpp"

namespace magdisk {

DerivativeRecord lambda_prime(int n, double beta, const SolverConfig& cfg) {
  if (!(beta > 0)) throw Error(ErrorCode::InvalidParams, "lambda_prime needs beta > 0");
  const EigenPoint p = lowest_eigenvalue(n, beta, cfg);
  const double trace = eigenfunction(p, cfg).boundary_trace;
  DerivativeRecord r;
  r.n = n;
  r.beta = beta;
  r.boundary_trace_sq = trace * trace;
  const double w = n - 0.5 * beta;
  r.dlambda = p.lambda / beta - (p.lambda - w * w) * r.boundary_trace_sq / (2.0 * beta);

  const double h = 1e-5 * std::max(1.0, beta);
  r.central_difference =
      (lowest_eigenvalue(n, beta + h, cfg).lambda - lowest_eigenvalue(n, beta - h, cfg).lambda) / (2.0 * h);
  r.fh_vs_fd_gap = std::abs(r.dlambda - r.central_difference);
  return r;
}

OneSided one_sided_derivatives(const CrossingPoint& c, const SolverConfig& cfg) {
  return {lambda_prime(c.n, c.beta_n, cfg).dlambda, lambda_prime(c.n + 1, c.beta_n, cfg).dlambda};
}

double beta_min(int n, const SolverConfig& cfg) {
  if (n == 0) return 0.0;
  auto f = [&](double beta) { return eta_prime(n, beta, cfg); };
  roots::Bracket b{};
  const double step = std::max(0.5, 0.1 * std::sqrt(static_cast<double>(n)));
  if (!roots::scan_for_sign_change(f, 2.0 * n, step, 8.0 * n + 20.0, b)) {
    throw Error(ErrorCode::BracketFailure, "eta'(n, .) keeps its sign (n=" + std::to_string(n) + ")");
  }
  return roots::brent(f, b, 1e-12);
}

bool ScanReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const ScanItem& i) { return i.pass; });
}

ScanReport conjecture_scan(const std::vector<double>& beta_grid, int n_max, const std::vector<CrossingPoint>& crossings,
                           const DeGennesConstants& constants, const SolverConfig& cfg) {
  if (static_cast<int>(crossings.size()) < n_max + 2) {
    throw Error(ErrorCode::InsufficientData, "conjecture scan needs crossings for n = 0..n_max+1");
  }
  ScanReport rep;

  // (a) and (d) over the grid
  ScanItem a{"max eta(beta) - theta0", -std::numeric_limits<double>::infinity(), false, -1, 0.0};
  ScanItem d{"min slope of lambda(beta)", std::numeric_limits<double>::infinity(), false, -1, 0.0};
  double prev_beta = 0.0, prev_lambda = 0.0;
  bool have_prev = false;
  for (double beta : beta_grid) {
    const GroundState g = ground_state(beta, cfg);
    const double excess = g.point.eta - constants.theta0;
    if (excess > a.value) a = {a.name, excess, false, g.k, beta};
    if (have_prev) {
      const double slope = (g.point.lambda - prev_lambda) / (beta - prev_beta);
      if (slope < d.value) d = {d.name, slope, false, g.k, prev_beta};
    }
    prev_beta = beta;
    prev_lambda = g.point.lambda;
    have_prev = true;
  }
  // the crossings are the local maxima of eta(beta)
  for (int n = 0; n <= n_max; ++n) {
    const double excess = crossings[n].eta_star - constants.theta0;
    if (excess > a.value) a = {a.name, excess, false, n, crossings[n].beta_n};
  }
  a.pass = a.value < 0;
  d.pass = have_prev && d.value > 0;

  // (b)
  ScanItem b{"min eta*_{n+1} - eta*_n", std::numeric_limits<double>::infinity(), false, -1, 0.0};
  for (int n = 0; n <= n_max; ++n) {
    const double step = crossings[n + 1].eta_star - crossings[n].eta_star;
    if (step < b.value) b = {b.name, step, false, n, crossings[n].beta_n};
  }
  b.pass = b.value > 0;

  // (c)
  ScanItem c{"min lambda'_+(beta_n)", std::numeric_limits<double>::infinity(), false, -1, 0.0};
  for (int n = 0; n <= n_max; ++n) {
    const double right = lambda_prime(n + 1, crossings[n].beta_n, cfg).dlambda;
    if (right < c.value) c = {c.name, right, false, n, crossings[n].beta_n};
  }
  c.pass = c.value > 0;

  rep.items = {a, b, c, d};
  return rep;
}

DerivativeLimits derivative_limits_check(const std::vector<CrossingPoint>& crossings,
                                         const DeGennesConstants& constants, const SolverConfig& cfg) {
  if (crossings.size() < 17) throw Error(ErrorCode::InsufficientData, "derivative limits need at least 17 crossings");
  DerivativeLimits out;
  for (const auto& c : crossings) {
    const OneSided s = one_sided_derivatives(c, cfg);
    out.left.push(c.n, s.left);
    out.right.push(c.n, s.right);
  }
  const double spread = 1.5 * constants.c1 * std::abs(constants.xi0);
  out.left_check = limit_check("lambda'(n, beta_n) -> theta0 + (3/2) C1 |xi0|", out.left,
                               constants.theta0 + spread, 2e-3);
  out.right_check = limit_check("lambda'(n+1, beta_n) -> theta0 - (3/2) C1 |xi0|", out.right,
                                constants.theta0 - spread, 2e-3);
  HalfPowerSequence left1, right1;
  for (const auto& [n, v] : out.left.values) if (n >= 1) left1.push(n, v);
  for (const auto& [n, v] : out.right.values) if (n >= 1) right1.push(n, v);
  out.left_r4 = richardson(left1, 4);
  out.right_r4 = richardson(right1, 4);
  return out;
}

}  // namespace magdisk
