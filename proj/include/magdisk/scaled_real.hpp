#pragma once

#include <cmath>
#include <limits>

namespace magdisk {

// A real number stored as sign * exp(log_mag). Products and quotients stay
// representable far beyond the double range (M(a,b,z) reaches e^422 here).
class ScaledReal {
 public:
  ScaledReal() = default;

  static ScaledReal zero() { return {}; }
  static ScaledReal from_log(double log_mag, int sign = 1);
  static ScaledReal from_double(double value);

  double log_mag() const noexcept { return log_mag_; }
  int sign() const noexcept { return sign_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  // Overflows to +-inf (or underflows to 0) when outside the double range.
  double to_double() const noexcept;

  ScaledReal operator-() const noexcept { return from_log(log_mag_, -sign_); }

  friend ScaledReal operator*(const ScaledReal& x, const ScaledReal& y);
  friend ScaledReal operator/(const ScaledReal& x, const ScaledReal& y);
  friend ScaledReal operator+(const ScaledReal& x, const ScaledReal& y);
  friend ScaledReal operator-(const ScaledReal& x, const ScaledReal& y) { return x + (-y); }

 private:
  double log_mag_ = -std::numeric_limits<double>::infinity();
  int sign_ = 0;
};

// x / y as an ordinary double; finite whenever the true ratio is.
double ratio(const ScaledReal& x, const ScaledReal& y);

// |x - y| / max(|x|, |y|), or 0 when both vanish.
double relative_difference(const ScaledReal& x, const ScaledReal& y);

}  // namespace magdisk
