#pragma once

#include <Eigen/Dense>

namespace magdisk::fd {

// Uniform grid of `count` nodes on [left, right].
struct Grid1D {
  double left = 0.0;
  double right = 1.0;
  int count = 4001;

  double spacing() const { return (right - left) / (count - 1); }
  Eigen::VectorXd nodes() const { return Eigen::VectorXd::LinSpaced(count, left, right); }
  Grid1D refined() const { return {left, right, 2 * count - 1}; }
};

// Symmetric generalised problem A v = mu M v with A tridiagonal and M diagonal,
// over the unknown nodes of a grid. A is stored both as (diag, offdiag) and in
// the flux form diag[i] = edge[i] + edge[i+1] + potential[i],
// offdiag[i] = -edge[i+1], so that v^T A v can be formed from squared differences.
struct TridiagSystem {
  Eigen::VectorXd diag;
  Eigen::VectorXd offdiag;
  Eigen::VectorXd mass;
  Eigen::VectorXd edge;       // size = unknowns + 1; end entries couple to Dirichlet nodes (0 for Neumann)
  Eigen::VectorXd potential;  // q_i * mass_i

  Eigen::Index size() const { return diag.size(); }
  double energy(const Eigen::VectorXd& v) const;  // v^T A v
  double mass_norm2(const Eigen::VectorXd& v) const { return (mass.array() * v.array().square()).sum(); }
};

struct Eigenpair {
  double value = 0.0;
  Eigen::VectorXd vector;  // M-normalised, positive
};

// Smallest eigenpair: Sturm-count bisection, inverse iteration, then the
// Rayleigh quotient in flux form.
Eigenpair smallest_eigenpair(const TridiagSystem& sys);

// Thomas solve of (A - mu M) y = rhs; SingularPivot on an exact zero pivot.
Eigen::VectorXd shifted_solve(const TridiagSystem& sys, double mu, const Eigen::VectorXd& rhs);

// Number of generalised eigenvalues strictly below mu (inertia count). An
// exact zero pivot is retried with a nudged shift, then counted as negative.
int count_below(const TridiagSystem& sys, double mu);

// Conservative discretisation of -(1/r)(r f')' + (n/r - beta r/2)^2 f on
// (0, 1] with lumped weight r; Dirichlet (n > 0) or Neumann (n = 0) at 0,
// Neumann at 1. Unknowns exclude r = 0 when n > 0.
TridiagSystem assemble_disk(int n, double beta, const Grid1D& grid);

// -u'' + (t + xi)^2 u on [0, L], Neumann at 0, Dirichlet at L.
TridiagSystem assemble_degennes(double xi, const Grid1D& grid);

struct FdResult {
  double lambda = 0.0;         // Richardson combination (4 fine - coarse) / 3
  double lambda_coarse = 0.0;  // grid `count`
  double lambda_fine = 0.0;    // grid `2 count - 1`
  Eigen::VectorXd nodes;       // all nodes of the coarse grid
  Eigen::VectorXd eigvec;      // coarse-grid ground state on all nodes (Dirichlet nodes hold 0)
  Eigen::VectorXd eigvec_fine; // same on the refined grid
  bool truncation_warning = false;
};

FdResult fd_disk_eigen(int n, double beta, const Grid1D& grid);

// Grid must span [0, L] with L >= 8 + |xi|.
FdResult fd_degennes_eigen(double xi, double L, const Grid1D& grid);

}  // namespace magdisk::fd
