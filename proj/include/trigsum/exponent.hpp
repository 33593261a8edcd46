#pragma once

#include <cmath>
#include <numbers>

namespace trigsum {

/// Real exponent n of (1 + x)^n.
class ExponentN {
 public:
  constexpr ExponentN() = default;
  constexpr ExponentN(double value) : value_(value) {}  // NOLINT: implicit by intent

  constexpr double value() const { return value_; }

  // Exact test: 2.9999999 is not an integer exponent.
  bool is_integer() const { return std::isfinite(value_) && value_ == std::nearbyint(value_); }
  bool is_nonnegative_integer() const { return is_integer() && value_ >= 0.0; }
  bool is_negative_integer() const { return is_integer() && value_ < 0.0; }

  friend constexpr bool operator==(ExponentN, ExponentN) = default;

 private:
  double value_ = 0.0;
};

/// Angle in radians.
struct Angle {
  double radians = 0.0;

  static constexpr Angle from_degrees(double deg) { return Angle{deg * std::numbers::pi / 180.0}; }
  constexpr double degrees() const { return radians * 180.0 / std::numbers::pi; }

  friend constexpr Angle operator-(Angle a) { return Angle{-a.radians}; }
  friend constexpr bool operator==(Angle, Angle) = default;
};

namespace detail {

// Angles within this distance of an odd multiple of pi are treated as the pole.
inline constexpr double kAngleTolerance = 1e-12;

/// Distance from phi to the nearest odd multiple of pi.
inline double distance_to_pole(Angle phi) {
  return std::abs(std::remainder(phi.radians - std::numbers::pi, 2.0 * std::numbers::pi));
}

inline double distance_to_zero(Angle phi) {
  return std::abs(std::remainder(phi.radians, 2.0 * std::numbers::pi));
}

inline bool at_pole(Angle phi) { return distance_to_pole(phi) <= kAngleTolerance; }

}  // namespace detail
}  // namespace trigsum
