#pragma once

#include <cmath>
#include <utility>

#include "circleskin/core.hpp"
#include "circleskin/planar.hpp"

namespace circleskin {

/// One point of a medial axis transform (y(t), r(t)) with its derivative.
struct MatSample {
  Point2 position;
  double radius = 0.0;
  Vector2 velocity;
  double radius_rate = 0.0;
};

/// The two envelope branches at one parameter; `plus` is left of travel.
struct EnvelopePair {
  Point2 plus;
  Point2 minus;
};

/// Cyclographic image of a circle.
constexpr SpacePoint lift(const Circle& c) { return {c.center.x, c.center.y, c.radius}; }

constexpr Circle unlift(const SpacePoint& p) { return {p.down(), p.z}; }

/// Minkowski squared norm x^2 + y^2 - z^2.
constexpr double minkowski_norm2(const SpaceVector& v) { return v.x * v.x + v.y * v.y - v.z * v.z; }

inline bool is_space_like(const SpaceVector& v, double eps = kDefaultEpsilon) {
  return minkowski_norm2(v) > eps;
}

namespace detail {

// Unit normal n+- such that the envelope point is center - radius * n+-.
// Squared-root arguments within round-off of zero count as light-like.
inline std::pair<Vec2, Vec2> envelope_normals(Vector2 velocity, double radius_rate,
                                              const char* what) {
  const double speed2 = norm2(velocity);
  if (!(speed2 > 0.0)) throw GeometryError("singular parameterization: zero velocity");
  const double arg = speed2 - radius_rate * radius_rate;
  if (arg < -1e-12 * speed2) throw GeometryError(what);
  const double root = std::sqrt(std::max(arg, 0.0));
  const Vec2 along = radius_rate * velocity;
  const Vec2 across = root * rotate_cw(velocity);
  return {(along + across) / speed2, (along - across) / speed2};
}

}  // namespace detail

/// Envelope formula: the two points where the circle (y, r) touches the
/// boundary swept by the family.
inline EnvelopePair envelope_eval(const MatSample& s) {
  const auto [n_plus, n_minus] = detail::envelope_normals(
      s.velocity, s.radius_rate, "no real envelope (MAT not space-like here)");
  return {s.position - s.radius * n_plus, s.position - s.radius * n_minus};
}

/// Touching points of the circle `p` for the Hermite tangent `t`. The
/// result is invariant under positive scaling of `t`.
inline EnvelopePair envelope_points_from_hermite(const SpacePoint& p, const SpaceVector& t) {
  if (!(p.z > 0.0)) throw GeometryError("lifted point must have positive radius");
  const auto [n_plus, n_minus] =
      detail::envelope_normals(t.down(), t.z, "tangent is not space-like");
  return {p.down() - p.z * n_plus, p.down() - p.z * n_minus};
}

}  // namespace circleskin
