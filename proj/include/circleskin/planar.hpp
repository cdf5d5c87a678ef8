#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "circleskin/core.hpp"

namespace circleskin {

inline constexpr double kDefaultEpsilon = 1e-9;

struct Circle {
  Point2 center;
  double radius = 1.0;

  /// Power of p with respect to the circle: |p - O|^2 - r^2.
  double power(Point2 p) const { return norm2(p - center) - radius * radius; }

  /// True if p is inside the open disk shrunk by margin.
  bool strictly_contains(Point2 p, double margin) const {
    return distance(p, center) < radius - margin;
  }

  friend constexpr bool operator==(const Circle&, const Circle&) = default;
};

/// Diagonal of the bounding box of all disks; the length scale for
/// tolerances. Never returns zero.
inline double scene_diameter(std::span<const Circle> circles) {
  if (circles.empty()) return 1.0;
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (const Circle& c : circles) {
    lo_x = std::min(lo_x, c.center.x - c.radius);
    lo_y = std::min(lo_y, c.center.y - c.radius);
    hi_x = std::max(hi_x, c.center.x + c.radius);
    hi_y = std::max(hi_y, c.center.y + c.radius);
  }
  const double d = std::hypot(hi_x - lo_x, hi_y - lo_y);
  return d > 0.0 ? d : 1.0;
}

inline double scene_diameter(std::initializer_list<Circle> circles) {
  return scene_diameter(std::span<const Circle>(circles.begin(), circles.size()));
}

struct Line2 {
  Point2 point;
  Vector2 direction{1.0, 0.0};  // unit

  static Line2 through(Point2 p, Vector2 dir) { return {p, normalized(dir)}; }

  /// Positive when p lies left of the direction of travel.
  double signed_distance(Point2 p) const { return cross(direction, p - point); }
  double distance_to(Point2 p) const { return std::abs(signed_distance(p)); }
  Point2 foot(Point2 p) const { return point + dot(p - point, direction) * direction; }
};

using GeneralizedCircle = std::variant<Circle, Line2>;

enum class Orientation { excluding, including };

/// A circle or line touching three input circles with uniform orientation.
struct TangencySolution {
  GeneralizedCircle carrier;
  std::array<Point2, 3> tangency_points;  // one per input circle, input order
  Orientation orientation = Orientation::excluding;

  bool is_line() const { return std::holds_alternative<Line2>(carrier); }
};

/// Pair of touch points of one outer common tangent.
struct TangentPair {
  Point2 on_first;
  Point2 on_second;
};

inline Line2 radical_line(const Circle& c1, const Circle& c2, double eps = kDefaultEpsilon) {
  const Vec2 d = c2.center - c1.center;
  const double dist = norm(d);
  if (dist <= eps * scene_diameter({c1, c2})) throw GeometryError("no radical line: concentric circles");
  const Vec2 u = d / dist;
  // Signed offset from c1 along the center line; the power difference is
  // linear along it.
  const double a = (dist * dist + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * dist);
  return {c1.center + a * u, {-u.y, u.x}};
}

inline Point2 invert_point(Point2 p, const Circle& c, double eps = kDefaultEpsilon) {
  const Vec2 d = p - c.center;
  const double d2 = norm2(d);
  if (std::sqrt(d2) <= eps * c.radius) throw GeometryError("inversion pole: point at circle center");
  return c.center + (c.radius * c.radius / d2) * d;
}

/// Outer common tangents of two circles. The pair whose touch point on c1 lies
/// left of the directed center line c1 -> c2 comes first.
inline std::array<TangentPair, 2> outer_common_tangents(const Circle& c1, const Circle& c2,
                                                        double eps = kDefaultEpsilon) {
  const double tol = eps * scene_diameter({c1, c2});
  const Vec2 d = c2.center - c1.center;
  const double dist = norm(d);
  if (dist <= tol && std::abs(c1.radius - c2.radius) <= tol)
    throw GeometryError("degenerate: identical circles have no distinct outer tangents");
  if (dist <= std::abs(c2.radius - c1.radius) + tol)
    throw GeometryError("no outer tangents: one disk lies inside the other");

  // Unit normal n with n.O1 + c = r1 and n.O2 + c = r2; touch point is O - r n.
  const Vec2 u = d / dist;
  const Vec2 left{-u.y, u.x};
  const double k = (c2.radius - c1.radius) / dist;
  const double h = std::sqrt(std::max(0.0, 1.0 - k * k));

  // n = k u - h left puts the touch point O - r n on the left side.
  const Vec2 n_left = k * u - h * left;
  const Vec2 n_right = k * u + h * left;
  return {TangentPair{c1.center - c1.radius * n_left, c2.center - c2.radius * n_left},
          TangentPair{c1.center - c1.radius * n_right, c2.center - c2.radius * n_right}};
}

namespace detail {

inline Point2 touch_on_line(const Line2& line, const Circle& c) {
  const Vec2 to_foot = line.foot(c.center) - c.center;
  const double len = norm(to_foot);
  if (len == 0.0) throw GeometryError("no same-side Apollonius solution: line passes through a center");
  return c.center + (c.radius / len) * to_foot;
}

inline Point2 touch_on_circle(const Circle& carrier, const Circle& c) {
  const Vec2 d = c.center - carrier.center;
  const double len = norm(d);
  if (len == 0.0) throw GeometryError("no same-side Apollonius solution: carrier concentric with input");
  return carrier.center + (carrier.radius / len) * d;
}

inline TangencySolution line_solution(const Line2& line, const std::array<Circle, 3>& cs,
                                      Orientation o) {
  TangencySolution s{line, {}, o};
  for (std::size_t j = 0; j < 3; ++j) s.tangency_points[j] = touch_on_line(line, cs[j]);
  return s;
}

inline TangencySolution circle_solution(const Circle& carrier, const std::array<Circle, 3>& cs,
                                        Orientation o) {
  TangencySolution s{carrier, {}, o};
  for (std::size_t j = 0; j < 3; ++j) s.tangency_points[j] = touch_on_circle(carrier, cs[j]);
  return s;
}

}  // namespace detail

/// The two uniform-orientation solutions of the problem of Apollonius.
///
/// Unknowns are the carrier center X and a signed radius R with
/// |X - O_j| = R + r_j for all j. R > 0 gives the carrier that excludes all
/// inputs; R < 0 (with |R| > r_j) the one that includes them. Subtracting the
/// first equation from the others leaves two linear equations in (X, R), whose
/// solutions form a line Z0 + tau w; substituting into the first equation gives
/// a quadratic in tau. A vanishing leading coefficient (w light-like) sends one
/// root to infinity, which is a line carrier; a rank-deficient linear system
/// means the lifted circles are collinear and both solutions are lines.
///
/// Returns both uniform-orientation solutions, the excluding one first when
/// the two differ. Chains that dip or bulge on both sides give two excluding
/// or two including carriers.
inline std::array<TangencySolution, 2> apollonius_same_side(const Circle& c1, const Circle& c2,
                                                            const Circle& c3,
                                                            double eps = kDefaultEpsilon) {
  const std::array<Circle, 3> cs{c1, c2, c3};
  const double scale = scene_diameter({c1, c2, c3});
  const double tol = eps * scale;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (distance(cs[i].center, cs[j].center) <= tol && std::abs(cs[i].radius - cs[j].radius) <= tol)
        throw GeometryError("no same-side Apollonius solution: identical input circles");

  // Work relative to O1 and in units of the scene size for conditioning.
  const auto rel = [&](const Circle& c) {
    return Vec3{(c.center.x - c1.center.x) / scale, (c.center.y - c1.center.y) / scale,
                c.radius / scale};
  };
  const Vec3 p1 = rel(c1), p2 = rel(c2), p3 = rel(c3);
  const double r1 = p1.z;

  // 2 d.Y + 2 (r_j - r_1) R = |d|^2 - r_j^2 + r_1^2
  const auto row = [&](Vec3 p) { return Vec3{2.0 * p.x, 2.0 * p.y, 2.0 * (p.z - r1)}; };
  const auto rhs = [&](Vec3 p) { return p.x * p.x + p.y * p.y - p.z * p.z + r1 * r1; };
  const Vec3 a2 = row(p2), a3 = row(p3);
  const double b2 = rhs(p2), b3 = rhs(p3);

  Vec3 w = cross(a2, a3);
  const double wn = norm(w);
  if (wn <= 1e-12 * norm(a2) * norm(a3)) {
    // Lifted circles are collinear: the common outer tangents of the farthest
    // pair touch all three.
    std::size_t fi = 0, fj = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        const Vec3 d{cs[j].center.x - cs[i].center.x, cs[j].center.y - cs[i].center.y,
                     cs[j].radius - cs[i].radius};
        if (norm(d) > best) best = norm(d), fi = i, fj = j;
      }
    }
    const auto tangents = outer_common_tangents(cs[fi], cs[fj], eps);
    std::array<TangencySolution, 2> out;
    for (std::size_t k = 0; k < 2; ++k) {
      const Line2 line = Line2::through(tangents[k].on_first, tangents[k].on_second - tangents[k].on_first);
      out[k] = detail::line_solution(line, cs, k == 0 ? Orientation::excluding : Orientation::including);
      for (std::size_t j = 0; j < 3; ++j)
        if (std::abs(line.distance_to(cs[j].center) - cs[j].radius) > 1e3 * tol ||
            line.signed_distance(cs[j].center) * line.signed_distance(cs[fi].center) < 0.0)
          throw GeometryError("no same-side Apollonius solution");
    }
    return out;
  }
  w = w / wn;

  // Minimum-norm particular solution Z0 = A^T (A A^T)^-1 b.
  const double g11 = dot(a2, a2), g12 = dot(a2, a3), g22 = dot(a3, a3);
  const double det = g11 * g22 - g12 * g12;
  const double l2 = (g22 * b2 - g12 * b3) / det;
  const double l3 = (g11 * b3 - g12 * b2) / det;
  const Vec3 z0 = l2 * a2 + l3 * a3;

  // |Y|^2 - (R + r1)^2 along Z0 + tau w.
  const double qa = w.x * w.x + w.y * w.y - w.z * w.z;
  const double qb = 2.0 * (z0.x * w.x + z0.y * w.y - (z0.z + r1) * w.z);
  const double qc = z0.x * z0.x + z0.y * z0.y - (z0.z + r1) * (z0.z + r1);

  const auto to_scene = [&](double tau) {
    const Vec3 z = z0 + tau * w;
    return std::pair{Point2{c1.center.x + scale * z.x, c1.center.y + scale * z.y}, scale * z.z};
  };
  // Orientation of a finite root, or nullopt-like -1 for mixed orientation.
  const auto classify = [&](double signed_r) -> int {
    bool all_out = true, all_in = true;
    for (const Circle& c : cs) {
      const double s = signed_r + c.radius;
      all_out = all_out && s > tol;
      all_in = all_in && s < -tol;
    }
    return all_out ? 0 : (all_in ? 1 : -1);
  };

  std::vector<TangencySolution> found;
  const auto take_finite = [&](double tau) {
    const auto [center, signed_r] = to_scene(tau);
    const int k = classify(signed_r);
    if (k < 0) return;
    const Orientation o = k == 0 ? Orientation::excluding : Orientation::including;
    found.push_back(detail::circle_solution(Circle{center, std::abs(signed_r)}, cs, o));
  };

  if (std::abs(qa) <= 1e-10) {
    // One root at infinity: an oriented line. As tau * w.z -> +inf the
    // carrier center runs off along m, so every input touches at O + r m.
    const Vec2 wxy{w.x, w.y};
    const Vec2 m = (w.z > 0.0 ? 1.0 : -1.0) * normalized(wxy);
    if (std::abs(qb) > 1e-14) take_finite(-qc / qb);
    const Point2 touch = c1.center + c1.radius * m;
    const Line2 line{touch, {-m.y, m.x}};
    const bool finite_excludes = !found.empty() && found[0].orientation == Orientation::excluding;
    found.push_back(
        detail::line_solution(line, cs, finite_excludes ? Orientation::including : Orientation::excluding));
  } else {
    double disc = qb * qb - 4.0 * qa * qc;
    const double disc_tol = 1e-12 * (qb * qb + std::abs(4.0 * qa * qc));
    if (disc < -disc_tol) throw GeometryError("no same-side Apollonius solution: no real roots");
    disc = std::max(disc, 0.0);
    const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
    if (q != 0.0) {
      take_finite(q / qa);
      take_finite(qc / q);
    } else {
      take_finite(0.0);
    }
  }
  if (found.size() < 2)
    throw GeometryError("no same-side Apollonius solution: roots lack uniform orientation");
  std::stable_sort(found.begin(), found.end(), [](const TangencySolution& a, const TangencySolution& b) {
    return a.orientation == Orientation::excluding && b.orientation == Orientation::including;
  });
  std::array<TangencySolution, 2> out{found[0], found[1]};
  return out;
}

}  // namespace circleskin
