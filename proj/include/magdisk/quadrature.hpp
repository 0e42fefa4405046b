#pragma once

#include <Eigen/Dense>
#include <functional>

namespace magdisk::quad {

struct Rule {
  Eigen::VectorXd nodes;    // on [-1, 1]
  Eigen::VectorXd weights;
};

// Gauss-Legendre rule with `order` points (Golub-Welsch).
const Rule& gauss_legendre(int order);

// Sum of `order`-point Gauss-Legendre rules over consecutive panels
// [edges[i], edges[i+1]].
double composite(const std::function<double(double)>& f, const Eigen::VectorXd& edges, int order = 16);

struct AdaptiveResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
};

// Globally adaptive 7/15-point Gauss-Kronrod on [a, b]: the panel with the
// largest error estimate is halved until the total estimate meets
// rel_tol * |value| (+ abs_tol). Throws QuadratureFailure when a panel would
// exceed `max_depth` halvings or the panel budget runs out first.
AdaptiveResult adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol,
                        double abs_tol = 0.0, int max_depth = 60);

}  // namespace magdisk::quad
