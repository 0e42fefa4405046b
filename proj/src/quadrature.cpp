#include "magdisk/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <limits>
#include <algorithm>

#include "magdisk/errors.hpp"

namespace magdisk::quad {

const Rule& gauss_legendre(int order) {
  static std::map<int, Rule> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(order); it != cache.end()) return it->second;

  // Jacobi matrix of the Legendre recurrence.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  Rule rule;
  rule.nodes = es.eigenvalues();
  rule.weights = 2.0 * es.eigenvectors().row(0).array().square().transpose();

  // One Newton sweep on P_order polishes the nodes to full precision.
  for (int i = 0; i < order; ++i) {
    double x = rule.nodes[i];
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = order * (x * p1 - p0) / (x * x - 1.0);
    x -= p1 / dp;
    rule.nodes[i] = x;
    // recompute derivative at the polished node for the weight
    p0 = 1.0;
    p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dpn = order * (x * p1 - p0) / (x * x - 1.0);
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dpn * dpn);
  }
  return cache.emplace(order, std::move(rule)).first->second;
}

double composite(const std::function<double(double)>& f, const Eigen::VectorXd& edges, int order) {
  const Rule& rule = gauss_legendre(order);
  double total = 0.0;
  for (Eigen::Index p = 0; p + 1 < edges.size(); ++p) {
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    const double mid = 0.5 * (edges[p + 1] + edges[p]);
    double panel = 0.0;
    for (int i = 0; i < order; ++i) panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
    total += half * panel;
  }
  return total;
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (abscissae >= 0).
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double kronrod;
  double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = kWk[7] * fc;
  double g = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXk[j];
    const double s = f(c - x) + f(c + x);
    k += kWk[j] * s;
    if (j % 2 == 1) g += kWg[j / 2] * s;
  }
  return {k * h, std::abs((k - g) * h)};
}

}  // namespace

AdaptiveResult adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol,
                        double abs_tol, int max_depth) {
  // Global subdivision: always bisect the panel with the largest error estimate.
  struct Piece {
    double lo, hi;
    Panel p;
    int depth;
    bool operator<(const Piece& o) const { return p.error < o.p.error; }
  };
  std::priority_queue<Piece> pieces;
  const int initial = 8;
  double value = 0.0, error = 0.0;
  for (int i = 0; i < initial; ++i) {
    const double lo = a + (b - a) * i / initial, hi = a + (b - a) * (i + 1) / initial;
    Piece pc{lo, hi, gk15(f, lo, hi), 0};
    value += pc.p.kronrod;
    error += pc.p.error;
    pieces.push(pc);
  }
  int evals = 15 * initial;
  const int max_pieces = 4000;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto target = [&] { return std::max({rel_tol * std::abs(value), abs_tol, 50.0 * eps * std::abs(value)}); };
  while (error > target() && static_cast<int>(pieces.size()) < max_pieces) {
    Piece worst = pieces.top();
    if (worst.depth >= max_depth) break;
    pieces.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) break;
    Piece left{worst.lo, mid, gk15(f, worst.lo, mid), worst.depth + 1};
    Piece right{mid, worst.hi, gk15(f, mid, worst.hi), worst.depth + 1};
    evals += 30;
    value += left.p.kronrod + right.p.kronrod - worst.p.kronrod;
    error += left.p.error + right.p.error - worst.p.error;
    pieces.push(left);
    pieces.push(right);
  }
  // Re-sum to drop the running-update rounding.
  value = 0.0;
  error = 0.0;
  while (!pieces.empty()) {
    value += pieces.top().p.kronrod;
    error += pieces.top().p.error;
    pieces.pop();
  }
  if (error > target()) {
    throw Error(ErrorCode::QuadratureFailure,
                "adaptive Gauss-Kronrod did not reach the requested tolerance (error estimate " +
                    std::to_string(error) + ")");
  }
  return {value, error, evals};
}

}  // namespace magdisk::quad
