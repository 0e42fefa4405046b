#include "magdisk/intersections.hpp"

#include <array>
#include <cmath>

#include "magdisk/disk_spectrum.hpp"
#include "magdisk/errors.hpp"
#include "magdisk/roots.hpp"

namespace magdisk {

namespace {

std::string at(int n) { return " (n=" + std::to_string(n) + ")"; }

CrossingPoint finish(int n, double beta, double nu, CrossingMethod method, const SolverConfig& cfg) {
  CrossingPoint c;
  c.n = n;
  c.beta_n = beta;
  c.eta_star = 1.0 - 2.0 * nu;
  c.lambda_star = beta * c.eta_star;
  c.sj_residual = std::abs(beta - saint_james_beta(n, c.eta_star));
  c.sys_residuals = {boundary_residual_nu(n, beta, nu, cfg), boundary_residual_nu(n + 1, beta, nu, cfg)};
  c.method = method;
  return c;
}

// Tries a narrow bracket around the asymptotic guess before the full one.
roots::Bracket crossing_bracket(int n, const std::function<double(double)>& f) {
  const double guess = crossing_guess(n);
  const double half = 0.5 + 0.05 * std::sqrt(static_cast<double>(n));
  const double lo = std::max(2.0 * (n + 1), guess - half), hi = guess + half;
  const double f_lo = f(lo), f_hi = f(hi);
  if ((f_lo < 0) != (f_hi < 0)) return {lo, hi, f_lo, f_hi};
  const double wide_lo = 2.0 * (n + 1), wide_hi = saint_james_beta(n, 0.99) + 10.0;
  const double g_lo = f(wide_lo), g_hi = f(wide_hi);
  if ((g_lo < 0) == (g_hi < 0)) throw Error(ErrorCode::BracketFailure, "no sign change between mode curves" + at(n));
  return {wide_lo, wide_hi, g_lo, g_hi};
}

}  // namespace

std::string to_string(CrossingMethod m) {
  switch (m) {
    case CrossingMethod::CurveIntersection: return "curve_intersection";
    case CrossingMethod::KummerSystem: return "kummer_system";
    case CrossingMethod::ImplicitPhi: return "implicit_phi";
  }
  return "unknown";
}

double saint_james_beta(int n, double eta) {
  return 2.0 * eta + 2.0 * n + 1.0 + std::sqrt((2.0 * eta + 1.0) * (2.0 * eta + 1.0) + 8.0 * n * eta);
}

double saint_james_x(int n, double nu) {
  return (1.0 - 2.0 * nu + n + 0.5) + 0.5 * std::sqrt((3.0 - 4.0 * nu) * (3.0 - 4.0 * nu) + 8.0 * (1.0 - 2.0 * nu) * n);
}

double crossing_guess(int n) { return 2.0 * n + std::pow(2.0, 1.5) * 0.768 * std::sqrt(static_cast<double>(n)) + 2.0; }

CrossingPoint crossing_by_curves(int n, const SolverConfig& cfg) {
  if (n < 0) throw Error(ErrorCode::InvalidParams, "mode index must be >= 0");
  auto gap = [&](double beta) { return lowest_eigenvalue(n, beta, cfg).eta - lowest_eigenvalue(n + 1, beta, cfg).eta; };
  const double beta = roots::brent(gap, crossing_bracket(n, gap), cfg.cross_rel_tol);
  return finish(n, beta, lowest_eigenvalue(n, beta, cfg).nu, CrossingMethod::CurveIntersection, cfg);
}

CrossingPoint crossing_by_system(int n, const SolverConfig& cfg) {
  if (n < 0) throw Error(ErrorCode::InvalidParams, "mode index must be >= 0");
  using Vec = std::array<double, 2>;
  auto F = [&](const Vec& p) -> Vec {
    return {boundary_residual_nu(n, 2.0 * p[0], p[1], cfg), boundary_residual_nu(n + 1, 2.0 * p[0], p[1], cfg)};
  };
  auto norm = [](const Vec& v) { return std::hypot(v[0], v[1]); };

  const double beta0 = crossing_guess(n);
  Vec p{0.5 * beta0, lowest_eigenvalue(n, beta0, cfg).nu};
  Vec f = F(p);
  bool converged = false;
  try {
    for (int iter = 0; iter < cfg.newton_max_iter; ++iter) {
      const double hx = 1e-7 * p[0], hn = 1e-7 * p[1];
      const Vec fxp = F({p[0] + hx, p[1]}), fxm = F({p[0] - hx, p[1]});
      const Vec fnp = F({p[0], p[1] + hn}), fnm = F({p[0], p[1] - hn});
      const double j00 = (fxp[0] - fxm[0]) / (2 * hx), j01 = (fnp[0] - fnm[0]) / (2 * hn);
      const double j10 = (fxp[1] - fxm[1]) / (2 * hx), j11 = (fnp[1] - fnm[1]) / (2 * hn);
      const double det = j00 * j11 - j01 * j10;
      if (det == 0.0 || !std::isfinite(det)) break;
      const Vec step{(j11 * f[0] - j01 * f[1]) / det, (j00 * f[1] - j10 * f[0]) / det};

      // halve until the residual norm decreases and nu stays in (0, 1/2)
      double t = 1.0;
      Vec trial{}, f_trial{};
      bool accepted = false;
      for (int k = 0; k < 30; ++k, t *= 0.5) {
        trial = {p[0] - t * step[0], p[1] - t * step[1]};
        if (!(trial[1] > 0.0 && trial[1] < 0.5 && trial[0] > 0.0)) continue;
        f_trial = F(trial);
        if (norm(f_trial) < norm(f) || norm(f_trial) == 0.0) {
          accepted = true;
          break;
        }
      }
      const bool small = std::abs(t * step[0]) <= cfg.cross_rel_tol * p[0] &&
                         std::abs(t * step[1]) <= cfg.cross_rel_tol * p[1];
      if (!accepted) {
        // no decrease possible: at the roundoff floor if the step is tiny
        converged = small;
        break;
      }
      p = trial;
      f = f_trial;
      if (small || norm(f) == 0.0) {
        converged = true;
        break;
      }
    }
  } catch (const Error&) {
    converged = false;
  }
  if (converged) return finish(n, 2.0 * p[0], p[1], CrossingMethod::KummerSystem, cfg);

  // Nested fallback: the mode-(n+1) residual at the mode-n eigenvalue changes
  // sign at the crossing.
  auto outer = [&](double beta) { return boundary_residual_nu(n + 1, beta, lowest_eigenvalue(n, beta, cfg).nu, cfg); };
  try {
    const double beta = roots::brent(outer, crossing_bracket(n, outer), cfg.cross_rel_tol);
    return finish(n, beta, lowest_eigenvalue(n, beta, cfg).nu, CrossingMethod::KummerSystem, cfg);
  } catch (const Error& e) {
    throw Error(ErrorCode::NewtonDivergence, std::string("Newton and nested fallback both failed: ") + e.what() + at(n));
  }
}

double implicit_phi(int n, double nu, const SolverConfig& cfg) {
  return boundary_residual_nu(n, 2.0 * saint_james_x(n, nu), nu, cfg);
}

CrossingPoint crossing_by_phi(int n, const SolverConfig& cfg) {
  if (n < 0) throw Error(ErrorCode::InvalidParams, "mode index must be >= 0");
  auto phi = [&](double nu) { return implicit_phi(n, nu, cfg); };
  // Walk down from nu = 1/2 (eta = 0); the first sign change is the ground state.
  roots::Bracket b{};
  const double step = 0.5 * cfg.eta_scan_step;
  if (!roots::scan_for_sign_change(phi, 0.5 - 1e-9, -step, 1e-12, b)) {
    throw Error(ErrorCode::BracketFailure, "implicit equation has no root in (0, 1/2)" + at(n));
  }
  const double nu = roots::brent(phi, b, 1e-15);
  return finish(n, 2.0 * saint_james_x(n, nu), nu, CrossingMethod::ImplicitPhi, cfg);
}

double eta_prime(int n, double beta, const SolverConfig& cfg) {
  const EigenPoint p = lowest_eigenvalue(n, beta, cfg);
  const double trace = eigenfunction(p, cfg).boundary_trace;
  const double s = n / std::sqrt(beta) - 0.5 * std::sqrt(beta);
  return trace * trace / (2.0 * beta) * (s * s - p.eta);
}

InterlacingSigns interlacing_check(const CrossingPoint& c, const SolverConfig& cfg) {
  return {eta_prime(c.n, c.beta_n, cfg), eta_prime(c.n + 1, c.beta_n, cfg)};
}

}  // namespace magdisk
