#pragma once

#include <utility>

#include "magdisk/config.hpp"
#include "magdisk/scaled_real.hpp"

namespace magdisk {

// Parameters of the confluent hypergeometric function M(a, b, z).
struct KummerArgs {
  double a;
  double b;
  double z;
};

// M(a, b, z) by its power series, summed with a running power-of-two rescale.
// Terms are positive when a > 0; negative a is accepted and summed signed.
ScaledReal kummer_m(const KummerArgs& args, const SolverConfig& cfg = {});

// M(a, b, z) and M(a+1, b+1, z) from one pass sharing the rescale factor.
std::pair<ScaledReal, ScaledReal> kummer_m_pair(const KummerArgs& args, const SolverConfig& cfg = {});

// Euler integral representation, valid for 0 < a < b. Independent of the
// series path; used to cross-check it.
ScaledReal kummer_m_integral(const KummerArgs& args, const SolverConfig& cfg = {});

// M(a+1, b+1, z) / M(a, b, z) as an ordinary double.
double kummer_ratio_shift_b(const KummerArgs& args, const SolverConfig& cfg = {});

// Relative residuals of the contiguous relations
//   z M(a+1,b+2) - (b+1) M(a+1,b+1) + (b+1) M(a,b+1) = 0
//   a M(a+1,b+1) - b M(a,b) - (a-b) M(a,b+1)         = 0
// each divided by its largest term magnitude.
std::pair<double, double> check_recurrences(const KummerArgs& args, const SolverConfig& cfg = {});

}  // namespace magdisk
