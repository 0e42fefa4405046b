#include "magdisk/kummer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "magdisk/errors.hpp"
#include "magdisk/quadrature.hpp"

namespace magdisk {

namespace {

constexpr int kRescaleExp = 600;
constexpr double kRescaleAt = 0x1p600;

void validate(const KummerArgs& args) {
  if (!std::isfinite(args.a) || !std::isfinite(args.b) || !std::isfinite(args.z)) {
    throw Error(ErrorCode::InvalidParams, "Kummer parameters must be finite");
  }
  if (args.b <= 0 && args.b == std::floor(args.b)) {
    throw Error(ErrorCode::InvalidParams, "Kummer lower parameter b is a non-positive integer");
  }
  if (args.z < 0) throw Error(ErrorCode::InvalidParams, "Kummer argument z must be >= 0");
}

ScaledReal to_scaled(double sum, long exponent) {
  if (sum == 0.0) return ScaledReal::zero();
  return ScaledReal::from_log(std::log(std::abs(sum)) + exponent * std::log(2.0), sum > 0 ? 1 : -1);
}

template <std::size_t Count>
struct LockstepSums {
  std::array<double, Count> sum;
  long exponent;  // true value = sum * 2^exponent
};

// Sums `count` Kummer series with parameters (a + i, b + i) in lockstep.
template <std::size_t Count>
LockstepSums<Count> lockstep_sums(const KummerArgs& args, const SolverConfig& cfg) {
  validate(args);
  std::array<double, Count> sum, term;
  sum.fill(1.0);
  term.fill(1.0);
  long exponent = 0;
  std::array<int, Count> quiet{};
  const int max_terms = cfg.max_terms_for(args.z);
  for (int k = 0;; ++k) {
    if (k >= max_terms) {
      throw Error(ErrorCode::NonConvergence, "Kummer series exceeded " + std::to_string(max_terms) +
                                                 " terms at z = " + std::to_string(args.z));
    }
    bool done = true;
    double biggest = 0.0;
    for (std::size_t i = 0; i < Count; ++i) {
      term[i] *= (args.a + i + k) / (args.b + i + k) * args.z / (k + 1);
      sum[i] += term[i];
      quiet[i] = std::abs(term[i]) < cfg.series_rel_tol * std::abs(sum[i]) ? quiet[i] + 1 : 0;
      done = done && quiet[i] >= 3;
      biggest = std::max({biggest, std::abs(sum[i]), std::abs(term[i])});
    }
    if (biggest > kRescaleAt) {
      for (std::size_t i = 0; i < Count; ++i) {
        sum[i] = std::ldexp(sum[i], -kRescaleExp);
        term[i] = std::ldexp(term[i], -kRescaleExp);
      }
      exponent += kRescaleExp;
    }
    if (done) break;
  }
  return {sum, exponent};
}

template <std::size_t Count>
std::array<ScaledReal, Count> lockstep_series(const KummerArgs& args, const SolverConfig& cfg) {
  const auto raw = lockstep_sums<Count>(args, cfg);
  std::array<ScaledReal, Count> out;
  for (std::size_t i = 0; i < Count; ++i) out[i] = to_scaled(raw.sum[i], raw.exponent);
  return out;
}

}  // namespace

ScaledReal kummer_m(const KummerArgs& args, const SolverConfig& cfg) {
  return lockstep_series<1>(args, cfg)[0];
}

std::pair<ScaledReal, ScaledReal> kummer_m_pair(const KummerArgs& args, const SolverConfig& cfg) {
  const auto both = lockstep_series<2>(args, cfg);
  return {both[0], both[1]};
}

double kummer_ratio_shift_b(const KummerArgs& args, const SolverConfig& cfg) {
  // The shared exponent cancels; dividing the mantissas avoids the rounding of
  // two large logarithms.
  const auto raw = lockstep_sums<2>(args, cfg);
  return raw.sum[1] / raw.sum[0];
}

ScaledReal kummer_m_integral(const KummerArgs& args, const SolverConfig& cfg) {
  validate(args);
  const double a = args.a, b = args.b, z = args.z;
  if (!(a > 0) || !(a < b)) {
    throw Error(ErrorCode::InvalidParams, "integral representation needs 0 < a < b");
  }
  const double c = b - a - 1.0;  // exponent of (1 - t)

  // Integrand carries e^{z(t-1)} so that the integral stays O(1); the e^z is
  // restored in log space.
  // Left half t in [0, 1/2], with t = u^{1/a} when a < 1.
  double left;
  if (a < 1.0) {
    auto f = [&](double u) {
      const double t = std::pow(u, 1.0 / a);
      return std::exp(z * (t - 1.0)) * std::pow(1.0 - t, c) / a;
    };
    left = quad::adaptive(f, 0.0, std::pow(0.5, a), cfg.quad_rel_tol).value;
  } else {
    auto f = [&](double t) { return std::exp(z * (t - 1.0)) * std::pow(t, a - 1.0) * std::pow(1.0 - t, c); };
    left = quad::adaptive(f, 0.0, 0.5, cfg.quad_rel_tol).value;
  }
  // Right half in s = 1 - t in [0, 1/2], with s = v^{1/(c+1)} when c < 0.
  double right;
  if (c < 0.0) {
    const double p = c + 1.0;
    auto f = [&](double v) {
      const double s = std::pow(v, 1.0 / p);
      return std::exp(-z * s) * std::pow(1.0 - s, a - 1.0) / p;
    };
    right = quad::adaptive(f, 0.0, std::pow(0.5, p), cfg.quad_rel_tol).value;
  } else {
    auto f = [&](double s) { return std::exp(-z * s) * std::pow(1.0 - s, a - 1.0) * std::pow(s, c); };
    right = quad::adaptive(f, 0.0, 0.5, cfg.quad_rel_tol).value;
  }
  const double log_prefactor = std::lgamma(b) - std::lgamma(b - a) - std::lgamma(a);
  return ScaledReal::from_log(log_prefactor + z + std::log(left + right));
}

std::pair<double, double> check_recurrences(const KummerArgs& args, const SolverConfig& cfg) {
  const double a = args.a, b = args.b, z = args.z;
  const auto [m_ab, m_a1b1] = kummer_m_pair({a, b, z}, cfg);
  const auto [m_ab1, m_a1b2] = kummer_m_pair({a, b + 1, z}, cfg);

  auto combine = [](std::initializer_list<ScaledReal> terms) {
    double scale = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms) scale = std::max(scale, t.log_mag());
    if (!std::isfinite(scale)) return 0.0;
    double total = 0.0, largest = 0.0;
    for (const auto& t : terms) {
      const double v = t.sign() * std::exp(t.log_mag() - scale);
      total += v;
      largest = std::max(largest, std::abs(v));
    }
    return std::abs(total) / largest;
  };
  auto times = [](double k, const ScaledReal& m) { return ScaledReal::from_double(k) * m; };

  const double first = combine({times(z, m_a1b2), times(-(b + 1), m_a1b1), times(b + 1, m_ab1)});
  const double second = combine({times(a, m_a1b1), times(-b, m_ab), times(-(a - b), m_ab1)});
  return {first, second};
}

}  // namespace magdisk
