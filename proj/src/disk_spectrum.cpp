#include "magdisk/disk_spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "magdisk/bessel.hpp"
#include "magdisk/errors.hpp"
#include "magdisk/kummer.hpp"
#include "magdisk/quadrature.hpp"
#include "magdisk/roots.hpp"

namespace magdisk {

namespace {

// Starting guess for the minimising mode, from the boundary-layer picture
// m ~ beta/2 + xi0 sqrt(beta) with xi0 ~ -0.768.
constexpr double kXi0Heuristic = -0.768;

double eta_upper_bound(int n, double beta) {
  // Rayleigh quotient of J_n(j'_{n,1} r) (n >= 1) or of the constant (n = 0).
  double bound;
  if (n == 0) {
    bound = beta * beta / 8.0;
  } else {
    const double j = bessel_j_prime_zero(n);
    bound = j * j - n * beta + beta * beta / 4.0;
  }
  return std::max(2.0, bound / beta + 1.0);
}

std::string where(int n, double beta) {
  return "(n=" + std::to_string(n) + ", beta=" + std::to_string(beta) + ")";
}

}  // namespace

double boundary_residual_nu(int n, double beta, double nu, const SolverConfig& cfg) {
  if (!(beta > 0)) throw Error(ErrorCode::InvalidParams, "boundary residual needs beta > 0");
  const double x = 0.5 * beta;
  const double scale = std::max(1.0, x);
  if (nu > 0) {
    const double r = kummer_ratio_shift_b({nu, n + 1.0, x}, cfg);
    return (n - x) / scale + 2.0 * nu * x * r / ((n + 1.0) * scale);
  }
  const auto [m0, m1] = kummer_m_pair({nu, n + 1.0, x}, cfg);
  const ScaledReal first = ScaledReal::from_double(n - x) * m0;
  const ScaledReal second = ScaledReal::from_double(2.0 * x * nu / (n + 1.0)) * m1;
  const double top = std::max(m0.log_mag(), m1.log_mag());
  const ScaledReal sum = first + second;
  if (sum.is_zero()) return 0.0;
  return sum.sign() * std::exp(sum.log_mag() - top) / scale;
}

double boundary_residual(int n, double beta, double eta_trial, const SolverConfig& cfg) {
  if (eta_trial >= 1.0) {
    throw Error(ErrorCode::InvalidParams, "boundary_residual needs eta_trial < 1 (nu > 0)");
  }
  return boundary_residual_nu(n, beta, 0.5 * (1.0 - eta_trial), cfg);
}

EigenPoint lowest_eigenvalue(int n, double beta, const SolverConfig& cfg) {
  if (n < 0) throw Error(ErrorCode::InvalidParams, "mode index must be >= 0");
  if (!(beta >= 0)) throw Error(ErrorCode::InvalidParams, "beta must be >= 0");
  EigenPoint p;
  p.n = n;
  p.beta = beta;
  if (beta == 0.0) {
    if (n > 0) {
      const double j = bessel_j_prime_zero(n);
      p.lambda = j * j;
    }
    return p;
  }

  auto res_eta = [&](double eta) { return boundary_residual_nu(n, beta, 0.5 * (1.0 - eta), cfg); };

  // Upward scan in eta from 0 (below the ground state). Steps are fixed below
  // eta = 1 and proportional to eta above it.
  double eta0 = 0.0, r0 = res_eta(eta0);
  double eta_max = -1.0;
  double eta1 = 0.0, r1 = r0;
  for (;;) {
    eta1 = eta0 < 1.0 ? std::min(eta0 + cfg.eta_scan_step, 1.0) : eta0 * (1.0 + cfg.eta_scan_step);
    r1 = res_eta(eta1);
    if (r1 == 0.0 || (r1 > 0) != (r0 > 0)) break;
    if (eta1 >= 2.0) {
      if (eta_max < 0) eta_max = eta_upper_bound(n, beta);
      if (eta1 > eta_max) {
        throw Error(ErrorCode::BracketFailure, "no sign change of the Neumann residual below eta_max " + where(n, beta));
      }
    }
    eta0 = eta1;
    r0 = r1;
  }

  if (eta1 <= 1.0) {
    // Refine in log(nu) so that 1 - eta keeps its relative accuracy.
    double nu_hi = 0.5 * (1.0 - eta0), f_hi = r0;  // below the root
    double nu_lo = 0.5 * (1.0 - eta1), f_lo = r1;
    if (r1 == 0.0) {
      p.nu = nu_lo;
    } else {
      if (nu_lo == 0.0) {
        // Residual sign at nu = 0 matches the far side; walk down in decades.
        nu_lo = nu_hi;
        for (;;) {
          nu_lo *= 1e-3;
          if (nu_lo < 1e-300) {
            throw Error(ErrorCode::BracketFailure, "eigenvalue ratio indistinguishable from 1 " + where(n, beta));
          }
          f_lo = boundary_residual_nu(n, beta, nu_lo, cfg);
          if (f_lo == 0.0 || (f_lo > 0) != (f_hi > 0)) break;
          nu_hi = nu_lo;
        }
      }
      if (f_lo == 0.0) {
        p.nu = nu_lo;
      } else {
        auto g = [&](double t) { return boundary_residual_nu(n, beta, std::exp(t), cfg); };
        const double t = roots::brent(g, {std::log(nu_lo), std::log(nu_hi), f_lo, f_hi}, 0.0, cfg.eig_rel_tol);
        p.nu = std::exp(t);
      }
    }
    p.eta = 1.0 - 2.0 * p.nu;
  } else {
    const double eta = r1 == 0.0 ? eta1 : roots::brent(res_eta, {eta0, eta1, r0, r1}, cfg.eig_rel_tol);
    p.eta = eta;
    p.nu = 0.5 * (1.0 - eta);
  }
  p.lambda = beta * p.eta;
  return p;
}

double EigenfunctionHandle::value(double r, const SolverConfig& cfg) const {
  if (r < 0 || r > 1) throw Error(ErrorCode::InvalidParams, "eigenfunction evaluated outside [0, 1]");
  const int n = point.n;
  const double beta = point.beta;
  if (r == 0.0) return n == 0 ? (norm_const * kummer_m({point.nu, 1.0, 0.0}, cfg)).to_double() : 0.0;
  const ScaledReal m = kummer_m({point.nu, n + 1.0, 0.5 * beta * r * r}, cfg);
  const ScaledReal shape = ScaledReal::from_log(n * std::log(r) - 0.25 * beta * r * r) * m;
  return (norm_const * shape).to_double();
}

EigenfunctionHandle eigenfunction(const EigenPoint& point, const SolverConfig& cfg) {
  if (!(point.beta > 0)) throw Error(ErrorCode::InvalidParams, "eigenfunction needs beta > 0");
  const int n = point.n;
  const double beta = point.beta;
  auto log_shape = [&](double r) {
    const ScaledReal m = kummer_m({point.nu, n + 1.0, 0.5 * beta * r * r}, cfg);
    if (m.sign() <= 0) {
      throw Error(ErrorCode::InvalidParams, "eigenfunction is not positive; point is not a ground state");
    }
    return n * std::log(r) - 0.25 * beta * r * r + m.log_mag();
  };
  const double log_trace = log_shape(1.0);
  auto integrand = [&](double r) { return std::exp(2.0 * (log_shape(r) - log_trace)) * r; };

  // Panels graded toward r = 1 on the boundary-layer scale beta^{-1/2}.
  auto make_edges = [&](int refine) {
    const double w = std::min(1.0, 1.0 / std::sqrt(beta));
    std::vector<double> dist{0.0};
    double d = 0.0, h = 0.25 * w / refine;
    while (d < 1.0) {
      d = std::min(1.0, d + h);
      dist.push_back(d);
      if (d >= w) h *= std::pow(1.5, 1.0 / refine);
    }
    Eigen::VectorXd edges(static_cast<Eigen::Index>(dist.size()));
    for (std::size_t i = 0; i < dist.size(); ++i) edges[static_cast<Eigen::Index>(i)] = 1.0 - dist[dist.size() - 1 - i];
    return edges;
  };

  double previous = quad::composite(integrand, make_edges(1));
  double integral = previous;
  bool converged = false;
  for (int refine = 2; refine <= 16; refine *= 2) {
    integral = quad::composite(integrand, make_edges(refine));
    if (std::abs(integral - previous) <= 10.0 * cfg.quad_rel_tol * std::abs(integral)) {
      converged = true;
      break;
    }
    previous = integral;
  }
  if (!converged) throw Error(ErrorCode::QuadratureFailure, "eigenfunction normalisation " + where(n, beta));

  EigenfunctionHandle h;
  h.point = point;
  h.norm_const = ScaledReal::from_log(-log_trace - 0.5 * std::log(integral));
  h.boundary_trace = 1.0 / std::sqrt(integral);
  return h;
}

GroundState ground_state(double beta, const SolverConfig& cfg) {
  if (!(beta > 0)) throw Error(ErrorCode::InvalidParams, "ground_state needs beta > 0");
  int k = std::max(0, static_cast<int>(std::lround(0.5 * beta + kXi0Heuristic * std::sqrt(beta))));
  EigenPoint best = lowest_eigenvalue(k, beta, cfg);
  auto lower = [&](const EigenPoint& a, const EigenPoint& b) {
    return a.lambda < b.lambda - cfg.eig_rel_tol * b.lambda;
  };
  // Walk left while not worse (ties prefer the smaller index), then right.
  bool moved_left = false;
  while (k > 0) {
    EigenPoint left = lowest_eigenvalue(k - 1, beta, cfg);
    if (lower(best, left)) break;
    best = left;
    --k;
    moved_left = true;
  }
  if (!moved_left) {
    for (;;) {
      EigenPoint right = lowest_eigenvalue(k + 1, beta, cfg);
      if (!lower(right, best)) break;
      best = right;
      ++k;
    }
  }
  return {best, k};
}

}  // namespace magdisk
