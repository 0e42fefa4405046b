#pragma once

#include <vector>

#include "magdisk/degennes.hpp"
#include "magdisk/intersections.hpp"
#include "magdisk/report.hpp"

// Expensive fixtures computed once per test binary.
inline const magdisk::DeGennesConstants& shared_constants() {
  static const magdisk::DeGennesConstants c = magdisk::compute_degennes_constants();
  return c;
}

inline const std::vector<magdisk::CrossingPoint>& shared_crossings() {
  static const std::vector<magdisk::CrossingPoint> c = magdisk::report::crossings_up_to(401, {});
  return c;
}
