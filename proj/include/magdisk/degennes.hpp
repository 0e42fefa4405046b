#pragma once

#include <vector>

#include <Eigen/Dense>

#include "magdisk/config.hpp"

namespace magdisk {

// Constants of the half-line model operator h0 = -d^2/dt^2 + (t + xi)^2 on
// R+ with Neumann condition at 0, together with the second-order
// perturbation data of the boundary-layer expansion.
struct DeGennesConstants {
  double theta0 = 0.0;  // min over xi of the ground energy
  double xi0 = 0.0;     // the minimiser
  double c1 = 0.0;      // u0(0)^2 / 3
  double u0_trace = 0.0;
  double delta0_formula = 0.0;  // C1 / (2 sqrt(theta0))
  double delta0_fit = 0.0;      // vertex of the computed lambda2(delta)
  double c0_fit = 0.0;
  double lambda1_check = 0.0;  // <u0, h1 u0>, expected -C1
  double lambda2_leading = 0.0;  // delta^2 coefficient of lambda2
  double c0_grid_change = 0.0;   // |c0(count) - c0(2 count - 1)|

  // metadata
  int grid_count = 0;
  double L = 0.0;
};

// Ground energy of h0 at xi, two FD grids combined by Richardson.
double lambda_dg(double xi, const SolverConfig& cfg = {});

// Golden-section minimisation over xi in [-2, 0]; fills theta0, xi0, u0_trace
// and c1 (other fields are left at zero).
DeGennesConstants minimize_theta0(const SolverConfig& cfg = {});

// FD ground state of h0 at a given xi on the grid [0, L] with `count` nodes.
// Includes the Dirichlet node at L. Normalised with trapezoid weights.
struct HalfLineState {
  Eigen::VectorXd t;
  Eigen::VectorXd u;
  Eigen::VectorXd weight;
  double lambda = 0.0;  // discrete eigenvalue on this grid
};
HalfLineState half_line_state(double xi, double L, int count);

// <u, (t + xi) u> for the ground state at xi; zero at the minimiser.
double stationarity_check(const DeGennesConstants& constants, const SolverConfig& cfg = {});
double stationarity_at(double xi, const SolverConfig& cfg = {});

// <u0, h1 u0> at the given delta.
double lambda1_check(const DeGennesConstants& constants, double delta = 0.0, const SolverConfig& cfg = {});

struct Lambda2Profile {
  std::vector<double> delta;
  std::vector<double> lambda2;
  double leading = 0.0;  // a in a (delta - delta0)^2 + a C0
  double delta0_fit = 0.0;
  double c0_fit = 0.0;
  double fit_residual = 0.0;  // max abs deviation from the fitted quadratic
};

// lambda2(delta) = <u0, h2 u0> + <u0, (h1 - lambda1) u1>, u1 from the
// bordered solve (h0 - theta0) u1 = -(h1 - lambda1) u0, <u0, u1> = 0.
// `count` = 0 uses cfg.degennes_grid_count.
Lambda2Profile lambda2_profile(const std::vector<double>& delta_grid, const DeGennesConstants& constants,
                               const SolverConfig& cfg = {}, int count = 0);

// minimize_theta0 followed by lambda1_check and lambda2_profile on the
// default delta grid {-2, -1.5, ..., 2}.
DeGennesConstants compute_degennes_constants(const SolverConfig& cfg = {});

}  // namespace magdisk
