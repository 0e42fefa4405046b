#pragma once

#include <string>
#include <vector>

#include "magdisk/asymptotics.hpp"
#include "magdisk/config.hpp"
#include "magdisk/degennes.hpp"
#include "magdisk/intersections.hpp"

namespace magdisk {

struct DerivativeRecord {
  int n = 0;
  double beta = 0.0;
  double dlambda = 0.0;            // boundary-trace formula
  double boundary_trace_sq = 0.0;  // f(1)^2
  double central_difference = 0.0;
  double fh_vs_fd_gap = 0.0;
};

// lambda'(n, beta) = lambda/beta - (lambda - (n - beta/2)^2) f(1)^2 / (2 beta),
// with a central difference of step 1e-5 max(1, beta) alongside.
DerivativeRecord lambda_prime(int n, double beta, const SolverConfig& cfg = {});

struct OneSided {
  double left = 0.0;   // lambda'(n, beta_n)
  double right = 0.0;  // lambda'(n+1, beta_n)
};
OneSided one_sided_derivatives(const CrossingPoint& c, const SolverConfig& cfg = {});

// Minimiser of beta -> eta(n, beta); 0 for n = 0 where eta is increasing.
double beta_min(int n, const SolverConfig& cfg = {});

struct ScanItem {
  std::string name;
  double value = 0.0;  // extremal value over the scan
  bool pass = false;
  int witness_n = -1;
  double witness_beta = 0.0;
};

struct ScanReport {
  std::vector<ScanItem> items;
  bool all_pass() const;
};

// Finite-range checks of the open monotonicity conjectures:
//  (a) max over the grid and the crossings of eta(beta) - theta0 < 0
//  (b) min over n of eta*_{n+1} - eta*_n > 0
//  (c) min over n of lambda'_+(beta_n) = lambda'(n+1, beta_n) > 0
//  (d) min over the grid of the forward-difference slope of lambda(beta) > 0
// `crossings` must hold n = 0..n_max+1 (item (b) needs one beyond n_max).
ScanReport conjecture_scan(const std::vector<double>& beta_grid, int n_max, const std::vector<CrossingPoint>& crossings,
                           const DeGennesConstants& constants, const SolverConfig& cfg = {});

struct DerivativeLimits {
  HalfPowerSequence left, right;  // lambda'(n, beta_n), lambda'(n+1, beta_n)
  HalfPowerSequence left_r4, right_r4;
  LimitCheck left_check, right_check;
};

// R4 of the one-sided derivative sequences compared with
// theta0 +- (3/2) C1 |xi0|. InsufficientData with fewer than 17 crossings.
DerivativeLimits derivative_limits_check(const std::vector<CrossingPoint>& crossings,
                                         const DeGennesConstants& constants, const SolverConfig& cfg = {});

}  // namespace magdisk
