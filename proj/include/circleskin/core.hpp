#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace circleskin {

/// Raised when a geometric construction has no (real, finite) answer.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Planar point or vector in scene units.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
  Vec2& operator+=(Vec2 b) { x += b.x; y += b.y; return *this; }
  Vec2& operator-=(Vec2 b) { x -= b.x; y -= b.y; return *this; }

  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

using Point2 = Vec2;
using Vector2 = Vec2;

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
constexpr double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// Clockwise quarter turn, (x, y) -> (y, -x). This is the perp operator used
/// by the envelope formulas throughout the library.
constexpr Vec2 rotate_cw(Vec2 v) { return {v.y, -v.x}; }

inline Vec2 normalized(Vec2 v) {
  const double n = norm(v);
  if (n == 0.0) throw GeometryError("cannot normalize a zero vector");
  return v / n;
}

inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Point or vector of R^{2,1}; z carries the radius for lifted circles.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  /// Projection onto the xy-plane.
  constexpr Vec2 down() const { return {x, y}; }

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return s * a; }
  friend constexpr Vec3 operator/(Vec3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

using SpacePoint = Vec3;
using SpaceVector = Vec3;

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

/// Absolute tolerance = eps * scale. Every construction here is
/// scale-covariant, so eps is meant for unit-sized scenes and scale is the
/// size of the data at hand.
struct Tolerance {
  double eps = 1e-9;
  double scale = 1.0;

  constexpr double abs() const { return eps * scale; }
  constexpr Tolerance scaled(double s) const { return {eps, s}; }
};

}  // namespace circleskin
