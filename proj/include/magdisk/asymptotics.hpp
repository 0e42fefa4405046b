#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magdisk/degennes.hpp"
#include "magdisk/intersections.hpp"

namespace magdisk {

// Sequence y_n = l + c_1 n^{-1/2} + c_2 n^{-1} + ... sampled at increasing n.
struct HalfPowerSequence {
  std::vector<std::pair<int, double>> values;

  std::optional<double> at(int n) const;
  bool empty() const { return values.empty(); }
  void push(int n, double v);
};

// z_n = (2^{k/2} y_{2n} - y_n) / (2^{k/2} - 1) for every n >= 1 with y_{2n}
// present. InsufficientData when no pair exists.
HalfPowerSequence richardson_step(const HalfPowerSequence& seq, int k);

// Steps k = 1..depth applied in turn.
HalfPowerSequence richardson(const HalfPowerSequence& seq, int depth);

// gamma_n = beta_{n+1} - beta_n over consecutive crossings starting at n = 0.
HalfPowerSequence gamma_sequence(const std::vector<CrossingPoint>& crossings);

// Least-squares slope of log|y_n - target| against log n over [n_lo, n_hi].
double log_log_slope(const HalfPowerSequence& seq, double target, int n_lo, int n_hi);

struct LimitCheck {
  std::string name;
  double expected = 0.0;
  double extrapolated = 0.0;   // R4 at the largest index where it exists
  int index = 0;               // that index
  double depth3 = 0.0;         // R3 at the same index
  double tolerance = 0.0;
  bool pass = false;
};

struct ExpansionReport {
  std::vector<LimitCheck> checks;
  bool all_pass() const;
};

// r1_n = beta_n - 2n - xi1 sqrt(n), xi1 = -2^{3/2} xi0, extrapolated to
// kappa0 = 1 - 2 delta0 + 2 xi0^2 (delta0 from the lambda2 fit).
ExpansionReport beta_expansion_check(const std::vector<CrossingPoint>& crossings, const DeGennesConstants& c);

// s_n = (theta0 - eta_n) sqrt(beta_n) -> C1 and
// t_n = (theta0 - eta_n) beta_n - C1 sqrt(beta_n) -> -3 C1 sqrt(theta0) (1/4 + C0).
ExpansionReport eta_star_expansion_check(const std::vector<CrossingPoint>& crossings, const DeGennesConstants& c);

// delta(m, beta) = m - beta/2 - xi0 sqrt(beta); at the crossings
// delta(n, beta_n) -> delta0 - 1/2 and delta(n+1, beta_n) -> delta0 + 1/2.
double delta_of(double m, double beta, double xi0);
ExpansionReport delta_at_crossings_check(const std::vector<CrossingPoint>& crossings, const DeGennesConstants& c);

// Builds one check from a sequence (index 0 ignored) and an expected limit.
LimitCheck limit_check(std::string name, const HalfPowerSequence& seq, double expected, double tolerance);

}  // namespace magdisk
