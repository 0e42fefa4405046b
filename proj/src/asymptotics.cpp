#include "magdisk/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "magdisk/errors.hpp"

namespace magdisk {

std::optional<double> HalfPowerSequence::at(int n) const {
  auto it = std::lower_bound(values.begin(), values.end(), n, [](const auto& p, int key) { return p.first < key; });
  if (it == values.end() || it->first != n) return std::nullopt;
  return it->second;
}

void HalfPowerSequence::push(int n, double v) {
  if (!values.empty() && n <= values.back().first) {
    throw Error(ErrorCode::InvalidParams, "sequence indices must be strictly increasing");
  }
  values.emplace_back(n, v);
}

HalfPowerSequence richardson_step(const HalfPowerSequence& seq, int k) {
  const double w = std::pow(2.0, 0.5 * k);
  HalfPowerSequence out;
  for (const auto& [n, y] : seq.values) {
    if (n < 1) continue;
    if (auto y2 = seq.at(2 * n)) out.push(n, (w * *y2 - y) / (w - 1.0));
  }
  if (out.empty()) throw Error(ErrorCode::InsufficientData, "no (n, 2n) pair for Richardson extrapolation");
  return out;
}

HalfPowerSequence richardson(const HalfPowerSequence& seq, int depth) {
  HalfPowerSequence s = seq;
  for (int k = 1; k <= depth; ++k) s = richardson_step(s, k);
  return s;
}

HalfPowerSequence gamma_sequence(const std::vector<CrossingPoint>& crossings) {
  HalfPowerSequence g;
  for (std::size_t i = 0; i + 1 < crossings.size(); ++i) {
    if (crossings[i].n != static_cast<int>(i) || crossings[i + 1].n != static_cast<int>(i + 1)) {
      throw Error(ErrorCode::InvalidParams, "gamma sequence needs consecutive crossings from n = 0");
    }
    g.push(crossings[i].n, crossings[i + 1].beta_n - crossings[i].beta_n);
  }
  return g;
}

double log_log_slope(const HalfPowerSequence& seq, double target, int n_lo, int n_hi) {
  std::vector<double> xs, ys;
  for (const auto& [n, y] : seq.values) {
    if (n < n_lo || n > n_hi) continue;
    const double d = std::abs(y - target);
    if (d == 0.0) continue;
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(d));
  }
  if (xs.size() < 2) throw Error(ErrorCode::InsufficientData, "log-log slope needs two points");
  const Eigen::Map<Eigen::VectorXd> x(xs.data(), static_cast<Eigen::Index>(xs.size()));
  const Eigen::Map<Eigen::VectorXd> y(ys.data(), static_cast<Eigen::Index>(ys.size()));
  const double xm = x.mean(), ym = y.mean();
  return ((x.array() - xm) * (y.array() - ym)).sum() / (x.array() - xm).square().sum();
}

bool ExpansionReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const LimitCheck& c) { return c.pass; });
}

LimitCheck limit_check(std::string name, const HalfPowerSequence& seq, double expected, double tolerance) {
  HalfPowerSequence trimmed;
  for (const auto& [n, y] : seq.values) {
    if (n >= 1) trimmed.push(n, y);
  }
  const HalfPowerSequence r3 = richardson(trimmed, 3);
  const HalfPowerSequence r4 = richardson_step(r3, 4);
  LimitCheck c;
  c.name = std::move(name);
  c.expected = expected;
  c.tolerance = tolerance;
  c.index = r4.values.back().first;
  c.extrapolated = r4.values.back().second;
  c.depth3 = *r3.at(c.index);
  c.pass = std::abs(c.extrapolated - expected) < tolerance;
  return c;
}

ExpansionReport beta_expansion_check(const std::vector<CrossingPoint>& crossings, const DeGennesConstants& c) {
  const double xi1 = -std::pow(2.0, 1.5) * c.xi0;
  const double kappa0 = 1.0 - 2.0 * c.delta0_fit + 2.0 * c.xi0 * c.xi0;
  HalfPowerSequence r1, r2;
  for (const auto& x : crossings) {
    const double v = x.beta_n - 2.0 * x.n - xi1 * std::sqrt(static_cast<double>(x.n));
    r1.push(x.n, v);
    r2.push(x.n, v - kappa0);
  }
  ExpansionReport rep;
  rep.checks.push_back(limit_check("beta_n - 2n - xi1 sqrt(n) -> kappa0", r1, kappa0, 5e-3));
  rep.checks.push_back(limit_check("beta_n - 2n - xi1 sqrt(n) - kappa0 -> 0", r2, 0.0, 5e-3));
  return rep;
}

ExpansionReport eta_star_expansion_check(const std::vector<CrossingPoint>& crossings, const DeGennesConstants& c) {
  HalfPowerSequence s, t;
  for (const auto& x : crossings) {
    const double gap = c.theta0 - x.eta_star;
    s.push(x.n, gap * std::sqrt(x.beta_n));
    t.push(x.n, gap * x.beta_n - c.c1 * std::sqrt(x.beta_n));
  }
  ExpansionReport rep;
  rep.checks.push_back(limit_check("(theta0 - eta*) sqrt(beta_n) -> C1", s, c.c1, 2e-3));
  rep.checks.push_back(limit_check("(theta0 - eta*) beta_n - C1 sqrt(beta_n) -> -3 C1 sqrt(theta0) (1/4 + C0)", t,
                                   -3.0 * c.c1 * std::sqrt(c.theta0) * (0.25 + c.c0_fit), 1e-2));
  return rep;
}

double delta_of(double m, double beta, double xi0) { return m - 0.5 * beta - xi0 * std::sqrt(beta); }

ExpansionReport delta_at_crossings_check(const std::vector<CrossingPoint>& crossings, const DeGennesConstants& c) {
  HalfPowerSequence lower, upper;
  for (const auto& x : crossings) {
    lower.push(x.n, delta_of(x.n, x.beta_n, c.xi0));
    upper.push(x.n, delta_of(x.n + 1, x.beta_n, c.xi0));
  }
  ExpansionReport rep;
  rep.checks.push_back(limit_check("delta(n, beta_n) -> delta0 - 1/2", lower, c.delta0_fit - 0.5, 2e-3));
  rep.checks.push_back(limit_check("delta(n+1, beta_n) -> delta0 + 1/2", upper, c.delta0_fit + 0.5, 2e-3));
  return rep;
}

}  // namespace magdisk
