#include "magdisk/degennes.hpp"

#include <algorithm>
#include <cmath>

#include "magdisk/errors.hpp"
#include "magdisk/fd_oracle.hpp"
#include "magdisk/roots.hpp"

namespace magdisk {

namespace {

constexpr double kXiLo = -2.0;
constexpr double kXiHi = 0.0;

// Truncation length: the configured L, stretched when the well moves inward.
double domain_length(double xi, const SolverConfig& cfg) { return std::max(cfg.degennes_L, 10.0 + std::abs(xi)); }

// Second-order derivative on the full node set: central inside, one-sided at
// both ends.
Eigen::VectorXd derivative(const Eigen::VectorXd& u, double h) {
  const Eigen::Index n = u.size();
  Eigen::VectorXd du(n);
  du.segment(1, n - 2) = (u.tail(n - 2) - u.head(n - 2)) / (2.0 * h);
  du[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h);
  du[n - 1] = (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) / (2.0 * h);
  return du;
}

double inner(const HalfLineState& s, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return (s.weight.array() * a.array() * b.array()).sum();
}

// h1 v for the given delta.
Eigen::VectorXd apply_h1(const HalfLineState& s, double xi, double delta, const Eigen::VectorXd& v) {
  const double h = s.t[1] - s.t[0];
  const Eigen::ArrayXd t = s.t.array();
  const Eigen::ArrayXd p = t + xi;
  const Eigen::ArrayXd q = delta - 0.5 * t.square();
  return derivative(v, h).array() + (2.0 * p * q + 2.0 * t * p.square()) * v.array();
}

Eigen::VectorXd apply_h2(const HalfLineState& s, double xi, double delta, const Eigen::VectorXd& v) {
  const double h = s.t[1] - s.t[0];
  const Eigen::ArrayXd t = s.t.array();
  const Eigen::ArrayXd p = t + xi;
  const Eigen::ArrayXd q = delta - 0.5 * t.square();
  return t * derivative(v, h).array() + (q.square() + 4.0 * t * p * q + 3.0 * t.square() * p.square()) * v.array();
}

// Solves the bordered system
//   [A - theta M   M u0] [u1]   [-M rhs]
//   [(M u0)^T        0 ] [mu] = [   0  ]
// on the unknown nodes (everything except the Dirichlet node at L). The
// arrowhead is solved by deflation: iterate with the SPD shifted matrix
// A - (theta - s) M and project onto the M-complement of u0 after each step.
// Each sweep damps the error by s / (gap + s).
Eigen::VectorXd bordered_solve(const fd::TridiagSystem& sys, const HalfLineState& s, const Eigen::VectorXd& rhs) {
  const Eigen::Index k = sys.size();
  const Eigen::VectorXd u = s.u.head(k);
  const Eigen::VectorXd mu0 = sys.mass.cwiseProduct(u);
  const auto apply_t = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd y = (sys.diag - s.lambda * sys.mass).cwiseProduct(x);
    y.head(k - 1) += sys.offdiag.cwiseProduct(x.tail(k - 1));
    y.tail(k - 1) += sys.offdiag.cwiseProduct(x.head(k - 1));
    return y;
  };
  const auto project = [&](Eigen::VectorXd x) {
    x -= mu0.dot(x) * u;
    return x;
  };

  Eigen::VectorXd b = -sys.mass.cwiseProduct(rhs.head(k));
  b -= u.dot(b) / u.dot(mu0) * mu0;  // multiplier of the border column
  constexpr double shift = 1e-3;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(k);
  double residual = 1.0;
  const double scale = std::max(b.norm(), 1e-300);
  for (int iter = 0; iter < 40 && residual > 1e-13; ++iter) {
    x = project(x + fd::shifted_solve(sys, s.lambda - shift, b - apply_t(x)));
    residual = (apply_t(x) - b).norm() / scale;
  }
  // residual of the full bordered system, border multiplier included
  const double border = std::abs(mu0.dot(x)) / std::max(x.norm(), 1e-300);
  if (!(residual <= 1e-8) || !(border <= 1e-8)) {
    throw Error(ErrorCode::IllConditioned, "bordered solve residual " + std::to_string(residual));
  }
  Eigen::VectorXd u1 = Eigen::VectorXd::Zero(rhs.size());
  u1.head(k) = x;
  return u1;
}

}  // namespace

HalfLineState half_line_state(double xi, double L, int count) {
  const fd::Grid1D grid{0.0, L, count};
  const fd::TridiagSystem sys = fd::assemble_degennes(xi, grid);
  const fd::Eigenpair pair = fd::smallest_eigenpair(sys);
  HalfLineState s;
  s.t = grid.nodes();
  s.u = Eigen::VectorXd::Zero(count);
  s.u.head(count - 1) = pair.vector;
  s.weight = Eigen::VectorXd::Constant(count, grid.spacing());
  s.weight[0] = s.weight[count - 1] = 0.5 * grid.spacing();
  s.lambda = pair.value;
  return s;
}

double lambda_dg(double xi, const SolverConfig& cfg) {
  const double L = domain_length(xi, cfg);
  return fd::fd_degennes_eigen(xi, L, {0.0, L, cfg.degennes_grid_count}).lambda;
}

DeGennesConstants minimize_theta0(const SolverConfig& cfg) {
  const auto f = [&](double xi) { return lambda_dg(xi, cfg); };
  const roots::Minimum m = roots::golden_section(f, kXiLo, kXiHi, 1e-8);
  if (m.x - kXiLo < 1e-6 || kXiHi - m.x < 1e-6) {
    throw Error(ErrorCode::MinimizationFailure, "De Gennes minimum sits on the xi bracket edge");
  }
  DeGennesConstants c;
  c.theta0 = m.f;
  c.xi0 = m.x;
  c.L = domain_length(m.x, cfg);
  c.grid_count = cfg.degennes_grid_count;
  const double coarse = half_line_state(c.xi0, c.L, c.grid_count).u[0];
  const double fine = half_line_state(c.xi0, c.L, 2 * c.grid_count - 1).u[0];
  c.u0_trace = (4.0 * fine - coarse) / 3.0;
  c.c1 = c.u0_trace * c.u0_trace / 3.0;
  c.delta0_formula = 0.5 * c.c1 / std::sqrt(c.theta0);
  return c;
}

double stationarity_at(double xi, const SolverConfig& cfg) {
  const HalfLineState s = half_line_state(xi, domain_length(xi, cfg), cfg.degennes_grid_count);
  return inner(s, (s.t.array() + xi).matrix(), s.u.cwiseProduct(s.u));
}

double stationarity_check(const DeGennesConstants& constants, const SolverConfig& cfg) {
  return stationarity_at(constants.xi0, cfg);
}

double lambda1_check(const DeGennesConstants& constants, double delta, const SolverConfig& cfg) {
  const HalfLineState s = half_line_state(constants.xi0, domain_length(constants.xi0, cfg), cfg.degennes_grid_count);
  return inner(s, s.u, apply_h1(s, constants.xi0, delta, s.u));
}

Lambda2Profile lambda2_profile(const std::vector<double>& delta_grid, const DeGennesConstants& constants,
                               const SolverConfig& cfg, int count) {
  if (delta_grid.size() < 5) throw Error(ErrorCode::InvalidParams, "lambda2 profile needs at least 5 deltas");
  const auto [dmin, dmax] = std::minmax_element(delta_grid.begin(), delta_grid.end());
  if (*dmin > -1.0 || *dmax < 1.0) throw Error(ErrorCode::InvalidParams, "delta grid must span [-1, 1]");
  if (count == 0) count = cfg.degennes_grid_count;

  const double xi = constants.xi0;
  const double L = domain_length(xi, cfg);
  const HalfLineState s = half_line_state(xi, L, count);
  const fd::TridiagSystem sys = fd::assemble_degennes(xi, {0.0, L, count});

  Lambda2Profile out;
  out.delta = delta_grid;
  for (double delta : delta_grid) {
    const Eigen::VectorXd h1u0 = apply_h1(s, xi, delta, s.u);
    const double lambda1 = inner(s, s.u, h1u0);
    const Eigen::VectorXd g = h1u0 - lambda1 * s.u;
    const Eigen::VectorXd u1 = bordered_solve(sys, s, g);
    const Eigen::VectorXd h1u1 = apply_h1(s, xi, delta, u1) - lambda1 * u1;
    out.lambda2.push_back(inner(s, s.u, apply_h2(s, xi, delta, s.u)) + inner(s, s.u, h1u1));
  }

  // least-squares quadratic a d^2 + b d + c
  const Eigen::Index m = static_cast<Eigen::Index>(delta_grid.size());
  Eigen::MatrixXd V(m, 3);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double d = delta_grid[i];
    V.row(i) << d * d, d, 1.0;
    y[i] = out.lambda2[i];
  }
  const Eigen::Vector3d coef = V.colPivHouseholderQr().solve(y);
  const double a = coef[0], b = coef[1], c = coef[2];
  if (!(a > 0)) throw Error(ErrorCode::IllConditioned, "lambda2 profile is not convex");
  out.leading = a;
  out.delta0_fit = -b / (2.0 * a);
  out.c0_fit = (c - b * b / (4.0 * a)) / a;
  out.fit_residual = (V * coef - y).cwiseAbs().maxCoeff();
  return out;
}

DeGennesConstants compute_degennes_constants(const SolverConfig& cfg) {
  DeGennesConstants c = minimize_theta0(cfg);
  c.lambda1_check = lambda1_check(c, 0.0, cfg);
  std::vector<double> deltas;
  for (int i = -4; i <= 4; ++i) deltas.push_back(0.5 * i);
  const Lambda2Profile coarse = lambda2_profile(deltas, c, cfg, cfg.degennes_grid_count);
  const Lambda2Profile fine = lambda2_profile(deltas, c, cfg, 2 * cfg.degennes_grid_count - 1);
  c.delta0_fit = (4.0 * fine.delta0_fit - coarse.delta0_fit) / 3.0;
  c.c0_fit = (4.0 * fine.c0_fit - coarse.c0_fit) / 3.0;
  c.lambda2_leading = (4.0 * fine.leading - coarse.leading) / 3.0;
  c.c0_grid_change = std::abs(fine.c0_fit - coarse.c0_fit);
  return c;
}

}  // namespace magdisk
