#include "magdisk/fd_oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "magdisk/errors.hpp"

namespace magdisk::fd {

namespace {

void finish_flux_form(TridiagSystem& sys) {
  const Eigen::Index k = sys.potential.size();
  sys.diag = sys.edge.head(k) + sys.edge.tail(k) + sys.potential;
  sys.offdiag = -sys.edge.segment(1, k - 1);
}

}  // namespace

Eigen::VectorXd shifted_solve(const TridiagSystem& sys, double mu, const Eigen::VectorXd& rhs) {
  const Eigen::Index k = sys.size();
  Eigen::VectorXd c(k), d(k);
  double piv = sys.diag[0] - mu * sys.mass[0];
  if (piv == 0.0) throw Error(ErrorCode::SingularPivot, "zero pivot in shifted solve");
  c[0] = k > 1 ? sys.offdiag[0] / piv : 0.0;
  d[0] = rhs[0] / piv;
  for (Eigen::Index i = 1; i < k; ++i) {
    piv = sys.diag[i] - mu * sys.mass[i] - sys.offdiag[i - 1] * c[i - 1];
    if (piv == 0.0) throw Error(ErrorCode::SingularPivot, "zero pivot in shifted solve");
    c[i] = i + 1 < k ? sys.offdiag[i] / piv : 0.0;
    d[i] = (rhs[i] - sys.offdiag[i - 1] * d[i - 1]) / piv;
  }
  Eigen::VectorXd y(k);
  y[k - 1] = d[k - 1];
  for (Eigen::Index i = k - 2; i >= 0; --i) y[i] = d[i] - c[i] * y[i + 1];
  return y;
}

namespace {

int count_below_once(const TridiagSystem& sys, double mu, bool& hit_zero) {
  int negatives = 0;
  double q = 1.0;
  hit_zero = false;
  for (Eigen::Index i = 0; i < sys.size(); ++i) {
    const double off2 = i > 0 ? sys.offdiag[i - 1] * sys.offdiag[i - 1] : 0.0;
    q = (sys.diag[i] - mu * sys.mass[i]) - (i > 0 ? off2 / q : 0.0);
    if (q == 0.0) {
      hit_zero = true;
      return 0;
    }
    if (q < 0) ++negatives;
  }
  return negatives;
}

}  // namespace

double TridiagSystem::energy(const Eigen::VectorXd& v) const {
  const Eigen::Index k = v.size();
  double e = edge[0] * v[0] * v[0] + edge[k] * v[k - 1] * v[k - 1];
  e += (edge.segment(1, k - 1).array() * (v.tail(k - 1) - v.head(k - 1)).array().square()).sum();
  e += (potential.array() * v.array().square()).sum();
  return e;
}

int count_below(const TridiagSystem& sys, double mu) {
  bool hit_zero = false;
  int count = count_below_once(sys, mu, hit_zero);
  for (int attempt = 0; hit_zero && attempt < 8; ++attempt) {
    mu += 1e-14 * std::max(1.0, std::abs(mu));
    count = count_below_once(sys, mu, hit_zero);
  }
  if (!hit_zero) return count;
  // Still zero: mu sits on an eigenvalue to rounding. Count the pivot as
  // negative, the rule used by LAPACK's bisection.
  int negatives = 0;
  double q = 1.0;
  for (Eigen::Index i = 0; i < sys.size(); ++i) {
    const double off2 = i > 0 ? sys.offdiag[i - 1] * sys.offdiag[i - 1] : 0.0;
    q = (sys.diag[i] - mu * sys.mass[i]) - (i > 0 ? off2 / q : 0.0);
    if (q == 0.0) q = -std::numeric_limits<double>::min();
    if (q < 0) ++negatives;
  }
  return negatives;
}

Eigenpair smallest_eigenpair(const TridiagSystem& sys) {
  const Eigen::Index k = sys.size();
  // Gershgorin bounds for M^{-1/2} A M^{-1/2}.
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (Eigen::Index i = 0; i < k; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(sys.offdiag[i - 1]) / std::sqrt(sys.mass[i] * sys.mass[i - 1]);
    if (i + 1 < k) radius += std::abs(sys.offdiag[i]) / std::sqrt(sys.mass[i] * sys.mass[i + 1]);
    const double centre = sys.diag[i] / sys.mass[i];
    lo = std::min(lo, centre - radius);
    hi = std::max(hi, centre + radius);
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-11 * std::max(1.0, std::abs(lo)); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(sys, mid) >= 1) hi = mid; else lo = mid;
  }

  // Inverse iteration from below the eigenvalue: A - lo M stays positive definite.
  double shift = lo - 1e-9 * std::max(1.0, std::abs(lo));
  Eigen::VectorXd v = Eigen::VectorXd::Ones(k);
  double value = 0.0;
  bool converged = false;
  for (int iter = 0; iter < 50; ++iter) {
    Eigen::VectorXd y = shifted_solve(sys, shift, sys.mass.cwiseProduct(v));
    y /= std::sqrt(sys.mass_norm2(y));
    if (y.sum() < 0) y = -y;
    const double next = sys.energy(y);
    const double change = (y - v).cwiseAbs().maxCoeff();
    v = std::move(y);
    if (iter > 0 && std::abs(next - value) <= 1e-15 * std::abs(next) && change < 1e-12) {
      value = next;
      converged = true;
      break;
    }
    value = next;
  }
  if (!converged) throw Error(ErrorCode::NonConvergence, "inverse iteration did not converge");
  return {value, v};
}

TridiagSystem assemble_disk(int n, double beta, const Grid1D& grid) {
  if (n < 0 || beta < 0) throw Error(ErrorCode::InvalidParams, "disk FD needs n >= 0 and beta >= 0");
  if (grid.count < 16 || grid.left != 0.0 || grid.right != 1.0) {
    throw Error(ErrorCode::InvalidParams, "disk FD grid must span [0, 1] with count >= 16");
  }
  const int nodes = grid.count;
  const double h = grid.spacing();
  const int first = n > 0 ? 1 : 0;  // first unknown node
  const int k = nodes - first;
  TridiagSystem sys;
  sys.mass.resize(k);
  sys.potential.resize(k);
  sys.edge.resize(k + 1);
  for (int j = 0; j < k; ++j) {
    const int i = first + j;
    const double r = i * h;
    double m;
    if (i == 0) m = h * h / 8.0;
    else if (i == nodes - 1) m = 0.5 * h - h * h / 8.0;
    else m = r * h;
    sys.mass[j] = m;
    const double q = i == 0 ? 0.0 : std::pow(n / r - 0.5 * beta * r, 2);
    sys.potential[j] = q * m;
  }
  // edge[j] couples unknown j-1 and j, i.e. nodes first+j-1 and first+j.
  for (int j = 0; j <= k; ++j) {
    const int left_node = first + j - 1;
    if (left_node < 0 || left_node + 1 > nodes - 1) {
      sys.edge[j] = 0.0;  // Neumann at r = 0 (n = 0) or at r = 1
    } else {
      sys.edge[j] = (left_node + 0.5) * h / h;
    }
  }
  finish_flux_form(sys);
  return sys;
}

TridiagSystem assemble_degennes(double xi, const Grid1D& grid) {
  if (grid.count < 16 || grid.left != 0.0 || !(grid.right > 0)) {
    throw Error(ErrorCode::InvalidParams, "half-line FD grid must span [0, L] with count >= 16");
  }
  const int k = grid.count - 1;  // node count-1 sits on the Dirichlet end
  const double h = grid.spacing();
  TridiagSystem sys;
  sys.mass.resize(k);
  sys.potential.resize(k);
  sys.edge = Eigen::VectorXd::Constant(k + 1, 1.0 / h);
  sys.edge[0] = 0.0;  // Neumann at t = 0
  for (int i = 0; i < k; ++i) {
    const double t = i * h;
    sys.mass[i] = i == 0 ? 0.5 * h : h;
    sys.potential[i] = (t + xi) * (t + xi) * sys.mass[i];
  }
  finish_flux_form(sys);
  return sys;
}

namespace {

Eigen::VectorXd embed(const Eigen::VectorXd& unknowns, int nodes, int first) {
  Eigen::VectorXd full = Eigen::VectorXd::Zero(nodes);
  full.segment(first, unknowns.size()) = unknowns;
  return full;
}

}  // namespace

FdResult fd_disk_eigen(int n, double beta, const Grid1D& grid) {
  const Grid1D fine = grid.refined();
  const Eigenpair coarse = smallest_eigenpair(assemble_disk(n, beta, grid));
  const Eigenpair refined = smallest_eigenpair(assemble_disk(n, beta, fine));
  FdResult out;
  out.lambda_coarse = coarse.value;
  out.lambda_fine = refined.value;
  out.lambda = (4.0 * refined.value - coarse.value) / 3.0;
  out.nodes = grid.nodes();
  const int first = n > 0 ? 1 : 0;
  out.eigvec = embed(coarse.vector, grid.count, first);
  out.eigvec_fine = embed(refined.vector, fine.count, first);
  return out;
}

FdResult fd_degennes_eigen(double xi, double L, const Grid1D& grid) {
  if (grid.left != 0.0 || grid.right != L) throw Error(ErrorCode::InvalidParams, "grid must span [0, L]");
  if (L < 8.0 + std::abs(xi)) {
    throw Error(ErrorCode::InvalidParams, "half-line truncation needs L >= 8 + |xi|");
  }
  const Grid1D fine = grid.refined();
  const Eigenpair coarse = smallest_eigenpair(assemble_degennes(xi, grid));
  const Eigenpair refined = smallest_eigenpair(assemble_degennes(xi, fine));
  FdResult out;
  out.lambda_coarse = coarse.value;
  out.lambda_fine = refined.value;
  out.lambda = (4.0 * refined.value - coarse.value) / 3.0;
  out.nodes = grid.nodes();
  out.eigvec = embed(coarse.vector, grid.count, 0);
  out.eigvec_fine = embed(refined.vector, fine.count, 0);
  out.truncation_warning = out.eigvec[grid.count - 2] > 1e-8;
  return out;
}

}  // namespace magdisk::fd
