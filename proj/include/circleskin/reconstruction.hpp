#pragma once

#include <cmath>
#include <optional>

#include "circleskin/core.hpp"
#include "circleskin/minkowski.hpp"
#include "circleskin/planar.hpp"

namespace circleskin {

struct ReconstructionInput {
  Circle circle;
  Point2 w_plus;
  Point2 w_minus;
};

struct ReconstructionResult {
  SpaceVector tangent;        // Euclidean unit length, space-like
  std::optional<Point2> apex; // where the tangent line pierces z = 0
  bool degenerate = false;    // diametral touching points, apex at infinity
};

namespace detail {

// gamma = cross(W- - O, W+ - O); vanishes for diametral points.
inline double chord_gamma(const ReconstructionInput& in) {
  return cross(in.w_minus - in.circle.center, in.w_plus - in.circle.center);
}

inline bool is_diametral(const ReconstructionInput& in, double eps) {
  const double r2 = in.circle.radius * in.circle.radius;
  return std::abs(chord_gamma(in)) <= eps * r2;
}

}  // namespace detail

/// Apex of the tangent cone through the two touching points: the inverse, in
/// the circle, of the foot of the perpendicular from the center onto the
/// chord W+ W-.
inline Point2 construct_apex(const ReconstructionInput& in, double eps = kDefaultEpsilon) {
  if (detail::is_diametral(in, eps)) throw GeometryError("apex at infinity: touching points are diametral");
  const Line2 chord = Line2::through(in.w_plus, in.w_minus - in.w_plus);
  const Point2 foot = chord.foot(in.circle.center);
  return invert_point(foot, in.circle, 0.0);
}

/// Closed form of construct_apex.
inline Point2 apex_closed_form(const ReconstructionInput& in, double eps = kDefaultEpsilon) {
  if (detail::is_diametral(in, eps)) throw GeometryError("apex at infinity: touching points are diametral");
  const double gamma = detail::chord_gamma(in);
  const double r2 = in.circle.radius * in.circle.radius;
  return {in.circle.center.x + r2 * (in.w_plus.y - in.w_minus.y) / gamma,
          in.circle.center.y - r2 * (in.w_plus.x - in.w_minus.x) / gamma};
}

/// Recovers the unit tangent t such that the envelope formula at lift(circle)
/// returns exactly (w_plus, w_minus). The tangent points along the line from
/// the lifted center to the apex; of the two orientations the one whose plus
/// branch lands on w_plus is kept.
inline ReconstructionResult reconstruct_tangent(const ReconstructionInput& in, double eps = kDefaultEpsilon) {
  const Circle& c = in.circle;
  const double tol = eps * scene_diameter({c});
  if (std::abs(distance(in.w_plus, c.center) - c.radius) > tol * 1e3 ||
      std::abs(distance(in.w_minus, c.center) - c.radius) > tol * 1e3 ||
      distance(in.w_plus, in.w_minus) <= tol)
    throw GeometryError("invalid touching points: both must lie on the circle and differ");

  const SpacePoint p = lift(c);
  const auto oriented = [&](SpaceVector t) {
    const EnvelopePair q = envelope_points_from_hermite(p, t);
    const EnvelopePair q_flip = envelope_points_from_hermite(p, -t);
    return distance(q.plus, in.w_plus) <= distance(q_flip.plus, in.w_plus) ? t : -t;
  };

  ReconstructionResult out;
  if (detail::is_diametral(in, eps)) {
    const Vec2 d = normalized(rotate_cw(in.w_plus - in.w_minus));
    out.tangent = oriented({d.x, d.y, 0.0});
    out.degenerate = true;
    return out;
  }
  const Point2 apex = construct_apex(in, eps);
  const SpaceVector u{apex.x - p.x, apex.y - p.y, -p.z};
  out.tangent = oriented(u / norm(u));
  out.apex = apex;
  return out;
}

}  // namespace circleskin
