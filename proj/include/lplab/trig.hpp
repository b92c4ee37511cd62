#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace lplab {

struct CosSin {
  double cos;
  double sin;
};

/// cos/sin that return exact 0 and +-1 when the angle is a multiple of pi/2 up to rounding
/// of the angle itself, so cosine tables such as cos(n*pi/2) come out as integers.
inline CosSin cos_sin(double angle) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  const double quarters = angle / half_pi;
  const double nearest = std::nearbyint(quarters);
  const double slack = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(quarters));
  if (std::abs(quarters - nearest) <= slack && std::abs(nearest) < 9.0e15) {
    switch (((static_cast<std::int64_t>(nearest) % 4) + 4) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace lplab
