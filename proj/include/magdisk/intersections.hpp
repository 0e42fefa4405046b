#pragma once

#include <string>
#include <utility>

#include "magdisk/config.hpp"

namespace magdisk {

enum class CrossingMethod { CurveIntersection, KummerSystem, ImplicitPhi };

std::string to_string(CrossingMethod m);

// The field strength where the curves of modes n and n+1 meet.
struct CrossingPoint {
  int n = 0;
  double beta_n = 0.0;
  double eta_star = 0.0;
  double lambda_star = 0.0;  // beta_n * eta_star
  double sj_residual = 0.0;  // |beta_n - saint_james_beta(n, eta_star)|
  std::pair<double, double> sys_residuals{0.0, 0.0};  // scaled Neumann residuals of modes n, n+1
  CrossingMethod method = CrossingMethod::CurveIntersection;
};

// Larger root of beta^2 - 2(2 eta + 2n + 1) beta + 4n(n+1) = 0.
double saint_james_beta(int n, double eta);

// Same relation solved for x = beta/2 in terms of nu = (1 - eta)/2.
double saint_james_x(int n, double nu);

// Asymptotic starting point 2n + 2^{3/2} 0.768 sqrt(n) + 2.
double crossing_guess(int n);

CrossingPoint crossing_by_curves(int n, const SolverConfig& cfg = {});
CrossingPoint crossing_by_system(int n, const SolverConfig& cfg = {});
CrossingPoint crossing_by_phi(int n, const SolverConfig& cfg = {});

// Phi(nu, n): the mode-n Neumann residual along the Saint-James curve.
double implicit_phi(int n, double nu, const SolverConfig& cfg = {});

// eta'(n, beta) from the boundary trace:
//   eta' = f(1)^2 / (2 beta) * ((n/sqrt(beta) - sqrt(beta)/2)^2 - eta).
double eta_prime(int n, double beta, const SolverConfig& cfg = {});

struct InterlacingSigns {
  double left = 0.0;   // eta'(n, beta_n), expected > 0
  double right = 0.0;  // eta'(n+1, beta_n), expected < 0
};
InterlacingSigns interlacing_check(const CrossingPoint& c, const SolverConfig& cfg = {});

}  // namespace magdisk
