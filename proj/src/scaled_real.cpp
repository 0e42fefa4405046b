#include "magdisk/scaled_real.hpp"

#include <algorithm>

namespace magdisk {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

ScaledReal ScaledReal::from_log(double log_mag, int sign) {
  ScaledReal r;
  if (sign == 0 || log_mag == kNegInf) return r;
  r.log_mag_ = log_mag;
  r.sign_ = sign > 0 ? 1 : -1;
  return r;
}

ScaledReal ScaledReal::from_double(double value) {
  if (value == 0.0) return {};
  return from_log(std::log(std::abs(value)), value > 0 ? 1 : -1);
}

double ScaledReal::to_double() const noexcept {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(log_mag_);
}

ScaledReal operator*(const ScaledReal& x, const ScaledReal& y) {
  if (x.is_zero() || y.is_zero()) return {};
  return ScaledReal::from_log(x.log_mag_ + y.log_mag_, x.sign_ * y.sign_);
}

ScaledReal operator/(const ScaledReal& x, const ScaledReal& y) {
  if (y.is_zero()) {
    return ScaledReal::from_log(std::numeric_limits<double>::infinity(), x.sign_ == 0 ? 1 : x.sign_);
  }
  if (x.is_zero()) return {};
  return ScaledReal::from_log(x.log_mag_ - y.log_mag_, x.sign_ * y.sign_);
}

ScaledReal operator+(const ScaledReal& x, const ScaledReal& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const ScaledReal& big = x.log_mag_ >= y.log_mag_ ? x : y;
  const ScaledReal& small = x.log_mag_ >= y.log_mag_ ? y : x;
  const double rel = std::exp(small.log_mag_ - big.log_mag_);
  const double factor = big.sign_ == small.sign_ ? 1.0 + rel : 1.0 - rel;
  if (factor == 0.0) return {};
  return ScaledReal::from_log(big.log_mag_ + std::log(factor), big.sign_);
}

double ratio(const ScaledReal& x, const ScaledReal& y) { return (x / y).to_double(); }

double relative_difference(const ScaledReal& x, const ScaledReal& y) {
  if (x.is_zero() && y.is_zero()) return 0.0;
  const double scale = std::max(x.log_mag(), y.log_mag());
  const double xs = x.sign() * std::exp(x.log_mag() - scale);
  const double ys = y.sign() * std::exp(y.log_mag() - scale);
  return std::abs(xs - ys) / std::max(std::abs(xs), std::abs(ys));
}

}  // namespace magdisk
