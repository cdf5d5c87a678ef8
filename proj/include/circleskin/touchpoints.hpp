#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "circleskin/core.hpp"
#include "circleskin/planar.hpp"

namespace circleskin {

enum class TouchSource {
  outer_tangent,
  apollonius_excluding,
  apollonius_including,
  envelope_formula,  // baseline mode: read off Hermite tangents
};

struct TouchPoints {
  Point2 plus;   // left skin
  Point2 minus;  // right skin
  TouchSource plus_source = TouchSource::outer_tangent;
  TouchSource minus_source = TouchSource::outer_tangent;
  bool available = true;
};

struct TouchPlan {
  std::vector<TouchPoints> points;  // one per input circle
};

struct Violation {
  int condition = 0;          // 1..5
  std::vector<int> circles;   // zero-based indices
  std::string description;
  bool interpreted = false;   // conditions resting on the segment reading of s_i
};

struct AdmissibilityReport {
  bool ok = true;
  std::vector<Violation> violations;
};

struct AdmissibilityOptions {
  double eps = kDefaultEpsilon;
  int boundary_samples = 4096;
  int interior_rings = 8;
  /// Read s_i as the closed center segment O_i O_{i+1} and evaluate
  /// conditions 4 and 5. When off, those conditions are not checked.
  bool interpret_segment_conditions = true;
};

namespace detail {

inline Point2 on_circle(const Circle& c, double angle) {
  return c.center + c.radius * Vec2{std::cos(angle), std::sin(angle)};
}

inline bool in_closed_disk(const Circle& c, Point2 p, double tol) {
  return distance(p, c.center) <= c.radius + tol;
}

inline bool in_open_disk(const Circle& c, Point2 p, double tol) {
  return distance(p, c.center) < c.radius - tol;
}

inline bool closed_disks_meet(const Circle& a, const Circle& b, double tol) {
  return distance(a.center, b.center) < a.radius + b.radius - tol;
}

// Intersections of the closed segment [a, b] with a circle.
inline std::vector<Point2> segment_circle_intersections(Point2 a, Point2 b, const Circle& c) {
  const Vec2 d = b - a;
  const Vec2 f = a - c.center;
  const double qa = norm2(d);
  std::vector<Point2> out;
  if (qa == 0.0) return out;
  const double qb = 2.0 * dot(f, d);
  const double qc = norm2(f) - c.radius * c.radius;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) return out;
  const double root = std::sqrt(disc);
  for (const double s : {(-qb - root) / (2.0 * qa), (-qb + root) / (2.0 * qa)})
    if (s >= 0.0 && s <= 1.0) out.push_back(a + s * d);
  if (out.size() == 2 && out[0] == out[1]) out.pop_back();
  return out;
}

}  // namespace detail

/// Checks the five admissibility conditions for skinning and reports every
/// violation. Indices in the report are zero-based.
inline AdmissibilityReport validate_admissibility(std::span<const Circle> circles,
                                                  const AdmissibilityOptions& opt = {}) {
  const int n = static_cast<int>(circles.size());
  if (n < 2) throw GeometryError("need at least two circles");
  const double tol = opt.eps * scene_diameter(circles);
  const double two_pi = 2.0 * std::numbers::pi;
  AdmissibilityReport report;
  const auto add = [&](int cond, std::vector<int> idx, std::string text, bool interpreted = false) {
    report.violations.push_back({cond, std::move(idx), std::move(text), interpreted});
  };
  const auto str = [](int i) { return std::to_string(i); };

  // (1) no disk is covered by the union of the others. Sampled on the
  // boundary and on concentric interior rings; a sample counts as covered
  // only when strictly inside another disk.
  for (int i = 0; i < n; ++i) {
    const Circle& ci = circles[i];
    bool covered = true;
    for (int ring = 0; ring <= opt.interior_rings && covered; ++ring) {
      const double rho = ci.radius * (1.0 - static_cast<double>(ring) / (opt.interior_rings + 1));
      const Circle probe{ci.center, rho};
      for (int k = 0; k < opt.boundary_samples && covered; ++k) {
        const Point2 p = detail::on_circle(probe, two_pi * k / opt.boundary_samples);
        bool inside_other = false;
        for (int j = 0; j < n && !inside_other; ++j)
          if (j != i) inside_other = detail::in_open_disk(circles[j], p, tol);
        covered = inside_other;
      }
    }
    if (covered) {
      bool center_covered = false;
      for (int j = 0; j < n && !center_covered; ++j)
        if (j != i) center_covered = detail::in_open_disk(circles[j], ci.center, tol);
      covered = center_covered;
    }
    if (covered) add(1, {i}, "disk " + str(i) + " is contained in the union of the other disks");
  }

  // (2) disks more than two apart in the order are disjoint.
  for (int i = 0; i < n; ++i)
    for (int j = i + 3; j < n; ++j)
      if (detail::closed_disks_meet(circles[i], circles[j], tol))
        add(2, {i, j}, "disks " + str(i) + " and " + str(j) + " overlap but are more than two apart");

  // (3) the overlap of the two neighbors lies inside the middle disk. The lens
  // is convex, so checking its boundary against the convex middle disk is
  // enough.
  for (int i = 1; i + 1 < n; ++i) {
    const Circle& a = circles[i - 1];
    const Circle& b = circles[i + 1];
    const Circle& m = circles[i];
    if (!detail::closed_disks_meet(a, b, -tol)) continue;
    bool inside = true;
    for (const auto& [arc, other] : {std::pair{a, b}, std::pair{b, a}}) {
      for (int k = 0; k < opt.boundary_samples && inside; ++k) {
        const Point2 p = detail::on_circle(arc, two_pi * k / opt.boundary_samples);
        if (detail::in_closed_disk(other, p, tol) && !detail::in_closed_disk(m, p, tol)) inside = false;
      }
    }
    // The corners of the lens are the circle intersections.
    const double d = distance(a.center, b.center);
    if (inside && d > tol && d < a.radius + b.radius && d > std::abs(a.radius - b.radius)) {
      const Vec2 u = (b.center - a.center) / d;
      const double along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
      const double h = std::sqrt(std::max(0.0, a.radius * a.radius - along * along));
      for (const double s : {h, -h}) {
        const Point2 corner = a.center + along * u + s * Vec2{-u.y, u.x};
        if (!detail::in_closed_disk(m, corner, tol)) inside = false;
      }
    }
    if (!inside)
      add(3, {i - 1, i, i + 1},
          "overlap of disks " + str(i - 1) + " and " + str(i + 1) + " is not contained in disk " + str(i));
  }

  if (!opt.interpret_segment_conditions) {
    report.ok = report.violations.empty();
    return report;
  }

  // (4) where the center segment O_i O_{i+1} crosses c_{i+2}, it must not be
  // inside d_{i+1}.
  for (int i = 0; i + 2 < n; ++i) {
    for (const Point2 p : detail::segment_circle_intersections(circles[i].center, circles[i + 1].center,
                                                               circles[i + 2])) {
      if (detail::in_open_disk(circles[i + 1], p, tol)) {
        add(4, {i, i + 1, i + 2},
            "segment between centers " + str(i) + " and " + str(i + 1) + " meets circle " + str(i + 2) +
                " inside disk " + str(i + 1),
            true);
        break;
      }
    }
  }

  // (5) where the center segment O_i O_{i+1} leaves c_i, it must not be inside
  // d_{i-1}. The segment does not exist for the last circle.
  for (int i = 1; i + 1 < n; ++i) {
    for (const Point2 p :
         detail::segment_circle_intersections(circles[i].center, circles[i + 1].center, circles[i])) {
      if (detail::in_open_disk(circles[i - 1], p, tol)) {
        add(5, {i - 1, i, i + 1},
            "segment between centers " + str(i) + " and " + str(i + 1) + " leaves circle " + str(i) +
                " inside disk " + str(i - 1),
            true);
        break;
      }
    }
  }

  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& l, const Violation& r) { return l.condition < r.condition; });
  report.ok = report.violations.empty();
  return report;
}

/// Left and right touching points for every circle. End circles use the outer
/// common tangents with their single neighbor; inner circles use the two
/// same-side Apollonius solutions of their triplet. Points are labeled by the
/// side of the local travel direction they fall on.
inline TouchPlan plan_touchpoints(std::span<const Circle> circles, double eps = kDefaultEpsilon) {
  const std::size_t n = circles.size();
  if (n < 2) throw GeometryError("need at least two circles");
  TouchPlan plan;
  plan.points.resize(n);

  const auto at = [&](std::size_t i, const char* what, auto&& fn) {
    try {
      return fn();
    } catch (const GeometryError& e) {
      throw GeometryError(std::string(what) + " at circle " + std::to_string(i) + ": " + e.what());
    }
  };

  const auto label = [&](std::size_t i, Vec2 travel, Point2 a, TouchSource sa, Point2 b, TouchSource sb) {
    const Point2 o = circles[i].center;
    if (cross(travel, a - o) < cross(travel, b - o)) std::swap(a, b), std::swap(sa, sb);
    plan.points[i] = {a, b, sa, sb, true};
  };

  {
    const auto tangents = at(0, "outer tangents", [&] { return outer_common_tangents(circles[0], circles[1], eps); });
    label(0, circles[1].center - circles[0].center, tangents[0].on_first, TouchSource::outer_tangent,
          tangents[1].on_first, TouchSource::outer_tangent);
  }
  {
    const auto tangents = at(n - 1, "outer tangents",
                             [&] { return outer_common_tangents(circles[n - 2], circles[n - 1], eps); });
    label(n - 1, circles[n - 1].center - circles[n - 2].center, tangents[0].on_second,
          TouchSource::outer_tangent, tangents[1].on_second, TouchSource::outer_tangent);
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const auto sols = at(i, "Apollonius", [&] {
      return apollonius_same_side(circles[i - 1], circles[i], circles[i + 1], eps);
    });
    const auto source = [](const TangencySolution& s) {
      return s.orientation == Orientation::excluding ? TouchSource::apollonius_excluding
                                                     : TouchSource::apollonius_including;
    };
    label(i, circles[i + 1].center - circles[i - 1].center, sols[0].tangency_points[1], source(sols[0]),
          sols[1].tangency_points[1], source(sols[1]));
  }
  return plan;
}

}  // namespace circleskin
