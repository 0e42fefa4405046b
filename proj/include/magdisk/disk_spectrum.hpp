#pragma once

#include <cmath>
#include <limits>

#include "magdisk/config.hpp"
#include "magdisk/scaled_real.hpp"

namespace magdisk {

// Lowest eigenvalue of the radial operator
//   H_{n,beta} = -d^2/dr^2 - (1/r) d/dr + (n/r - beta r/2)^2
// on (0, 1), Neumann at r = 1.
struct EigenPoint {
  int n = 0;
  double beta = 0.0;
  double lambda = 0.0;
  // lambda / beta; NaN when beta == 0.
  double eta = std::numeric_limits<double>::quiet_NaN();
  // (1 - eta) / 2, the Kummer upper parameter. Kept separately because eta
  // approaches 1 exponentially fast and 1 - eta would lose all digits.
  double nu = std::numeric_limits<double>::quiet_NaN();
};

// Normalised positive ground state
//   f(r) = C r^n e^{-beta r^2/4} M(nu, n+1, beta r^2 / 2),  int f^2 r dr = 1.
struct EigenfunctionHandle {
  EigenPoint point;
  ScaledReal norm_const;  // C
  double boundary_trace = 0.0;  // f(1)

  double value(double r, const SolverConfig& cfg = {}) const;
};

// Scaled Neumann residual at r = 1 for trial ratio eta:
//   (n+1)(n-x) M(nu,n+1,x) + 2 x nu M(nu+1,n+2,x),   nu = (1-eta)/2, x = beta/2,
// divided by (n+1) max(1,x) M(nu,n+1,x) when nu > 0. For nu <= 0 (eta >= 1)
// M(nu,n+1,x) may vanish, so the residual is divided by
// max(1,x) max(|M(nu,n+1,x)|, |M(nu+1,n+2,x)|) instead; the sign is the same.
double boundary_residual(int n, double beta, double eta_trial, const SolverConfig& cfg = {});

// Same residual parametrised by nu directly.
double boundary_residual_nu(int n, double beta, double nu, const SolverConfig& cfg = {});

EigenPoint lowest_eigenvalue(int n, double beta, const SolverConfig& cfg = {});

EigenfunctionHandle eigenfunction(const EigenPoint& point, const SolverConfig& cfg = {});

struct GroundState {
  EigenPoint point;
  int k = 0;
};

// lambda(beta) = min_n lambda(n, beta) with its minimising mode; ties go to the
// smaller mode index.
GroundState ground_state(double beta, const SolverConfig& cfg = {});

}  // namespace magdisk
