#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "circleskin/core.hpp"
#include "circleskin/minkowski.hpp"
#include "circleskin/planar.hpp"
#include "circleskin/re_segment.hpp"
#include "circleskin/reconstruction.hpp"
#include "circleskin/touchpoints.hpp"

namespace circleskin {

enum class SkinMode {
  inverse,   // touching points first, tangents reconstructed from them
  baseline,  // Catmull-Rom tangents, touching points read off the envelope
};

struct SkinConfig {
  SkinMode mode = SkinMode::inverse;
  double lambda = 0.5;
  SpineKind spine = SpineKind::cubic;
  int samples_per_segment = 64;
  std::vector<double> offsets;
  bool validate = true;
  double epsilon = kDefaultEpsilon;
  bool interpret_segment_conditions = true;
};

enum class DiagnosticKind {
  touch_point_inside_neighbor,
  non_space_like_tangent,
  segment_failed,
  offset_failed,
};

inline const char* to_string(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::touch_point_inside_neighbor: return "touching point inside neighbor disk";
    case DiagnosticKind::non_space_like_tangent: return "non-space-like tangent";
    case DiagnosticKind::segment_failed: return "segment failed";
    case DiagnosticKind::offset_failed: return "offset failed";
  }
  return "unknown";
}

struct Diagnostic {
  DiagnosticKind kind = DiagnosticKind::segment_failed;
  std::vector<int> circles;
  std::optional<Point2> point;
  std::string message;
};

/// G1 status of both skins where segment circle-1 meets segment circle.
struct Joint {
  int circle = 0;
  bool left_g1 = false;
  bool right_g1 = false;
};

using Polyline = std::vector<Point2>;

struct OffsetSkins {
  double distance = 0.0;
  std::vector<Polyline> left;   // per segment; empty when the offset failed
  std::vector<Polyline> right;
};

struct SkinResult {
  std::vector<Polyline> left_skin;   // per segment; empty when it failed
  std::vector<Polyline> right_skin;
  std::vector<Joint> joints;
  std::vector<std::optional<RESegment>> mat_segments;
  std::vector<SpaceVector> tangents;  // per circle
  TouchPlan touch_plan;
  AdmissibilityReport admissibility;
  std::vector<OffsetSkins> offsets;
  std::vector<Diagnostic> diagnostics;
};

/// Thrown by skin() when validation is on and the input is not admissible.
class AdmissibilityError : public GeometryError {
 public:
  explicit AdmissibilityError(AdmissibilityReport report)
      : GeometryError("input is not an admissible configuration for skinning"), report_(std::move(report)) {}
  const AdmissibilityReport& report() const { return report_; }

 private:
  AdmissibilityReport report_;
};

/// Catmull-Rom style tangents: lambda (P_{i+1} - P_{i-1}) inside, one-sided
/// differences at the ends. Not normalized.
inline std::vector<SpaceVector> catmull_rom_tangents(std::span<const SpacePoint> points, double lambda) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("need at least two points");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  std::vector<SpaceVector> t(n);
  t[0] = lambda * (points[1] - points[0]);
  t[n - 1] = lambda * (points[n - 1] - points[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i) t[i] = lambda * (points[i + 1] - points[i - 1]);
  return t;
}

namespace detail {

inline Point2 branch_point(const RESegment& seg, double t, bool plus) {
  const EnvelopePair e = envelope_eval(seg.sample(t));
  return plus ? e.plus : e.minus;
}

// One-sided second-order difference of an envelope branch at an end.
inline Vector2 branch_end_direction(const RESegment& seg, bool at_start, bool plus) {
  constexpr double h = 1e-5;
  const double s = at_start ? 1.0 : -1.0;
  const double t0 = at_start ? 0.0 : 1.0;
  const Point2 f0 = branch_point(seg, t0, plus);
  const Point2 f1 = branch_point(seg, t0 + s * h, plus);
  const Point2 f2 = branch_point(seg, t0 + 2.0 * s * h, plus);
  return s * (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
}

inline bool joint_is_g1(const RESegment& before, const RESegment& after, bool plus, double tol) {
  const Point2 a = branch_point(before, 1.0, plus);
  const Point2 b = branch_point(after, 0.0, plus);
  if (distance(a, b) > tol) return false;
  const Vector2 da = branch_end_direction(before, false, plus);
  const Vector2 db = branch_end_direction(after, true, plus);
  const double angle = std::atan2(std::abs(cross(da, db)), dot(da, db));
  return angle < 1e-6;
}

}  // namespace detail

inline void validate_config(const SkinConfig& config) {
  if (!(config.lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (config.samples_per_segment < 2) throw std::invalid_argument("samples per segment must be at least 2");
  if (!(config.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
}

inline void validate_circles(std::span<const Circle> circles) {
  if (circles.size() < 2) throw std::invalid_argument("need at least two circles");
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const Circle& c = circles[i];
    if (!is_finite(c.center) || !std::isfinite(c.radius))
      throw std::invalid_argument("circle " + std::to_string(i) + " has non-finite data");
    if (!(c.radius > 0.0)) throw std::invalid_argument("circle " + std::to_string(i) + " has non-positive radius");
  }
}

/// Skins an ordered set of circles with a left and a right G1 curve.
inline SkinResult skin(std::span<const Circle> circles, const SkinConfig& config = {}) {
  validate_circles(circles);
  validate_config(config);
  const int n = static_cast<int>(circles.size());
  const double tol = config.epsilon * scene_diameter(circles);

  SkinResult out;
  AdmissibilityOptions adm;
  adm.eps = config.epsilon;
  adm.interpret_segment_conditions = config.interpret_segment_conditions;
  out.admissibility = validate_admissibility(circles, adm);
  if (config.validate && !out.admissibility.ok) throw AdmissibilityError(out.admissibility);

  std::vector<SpacePoint> lifted;
  lifted.reserve(n);
  for (const Circle& c : circles) lifted.push_back(lift(c));

  if (config.mode == SkinMode::inverse) {
    out.touch_plan = plan_touchpoints(circles, config.epsilon);
    out.tangents.reserve(n);
    for (int i = 0; i < n; ++i) {
      const TouchPoints& w = out.touch_plan.points[i];
      try {
        out.tangents.push_back(reconstruct_tangent({circles[i], w.plus, w.minus}, config.epsilon).tangent);
      } catch (const GeometryError& e) {
        throw GeometryError("tangent reconstruction at circle " + std::to_string(i) + ": " + e.what());
      }
    }
  } else {
    out.tangents = catmull_rom_tangents(lifted, config.lambda);
    out.touch_plan.points.resize(n);
    for (int i = 0; i < n; ++i) {
      TouchPoints& w = out.touch_plan.points[i];
      w.plus_source = w.minus_source = TouchSource::envelope_formula;
      if (!is_space_like(out.tangents[i], 0.0)) {
        w.available = false;
        w.plus = w.minus = circles[i].center;
        out.diagnostics.push_back({DiagnosticKind::non_space_like_tangent, {i}, std::nullopt,
                                   "tangent at circle " + std::to_string(i) + " is not space-like"});
        continue;
      }
      const EnvelopePair q = envelope_points_from_hermite(lifted[i], out.tangents[i]);
      w.plus = q.plus;
      w.minus = q.minus;
    }
  }

  for (int i = 0; i < n; ++i) {
    const TouchPoints& w = out.touch_plan.points[i];
    if (!w.available) continue;
    for (const int j : {i - 1, i + 1}) {
      if (j < 0 || j >= n) continue;
      for (const Point2 p : {w.plus, w.minus}) {
        if (circles[j].strictly_contains(p, tol))
          out.diagnostics.push_back({DiagnosticKind::touch_point_inside_neighbor, {i, j}, p,
                                     "touching point of circle " + std::to_string(i) +
                                         " lies inside neighbor disk " + std::to_string(j)});
      }
    }
  }

  SegmentOptions seg_opt;
  seg_opt.spine = config.spine;
  seg_opt.eps = config.epsilon;
  const int segments = n - 1;
  out.mat_segments.resize(segments);
  out.left_skin.resize(segments);
  out.right_skin.resize(segments);
  out.offsets.resize(config.offsets.size());
  for (std::size_t k = 0; k < config.offsets.size(); ++k) {
    out.offsets[k].distance = config.offsets[k];
    out.offsets[k].left.resize(segments);
    out.offsets[k].right.resize(segments);
  }

  for (int k = 0; k < segments; ++k) {
    if (!out.touch_plan.points[k].available || !out.touch_plan.points[k + 1].available) {
      out.diagnostics.push_back({DiagnosticKind::segment_failed, {k, k + 1}, std::nullopt,
                                 "segment " + std::to_string(k) + " skipped: missing tangent data"});
      continue;
    }
    try {
      RESegment seg = build_re_segment(lifted[k], lifted[k + 1], out.tangents[k], out.tangents[k + 1], seg_opt);
      EnvelopeSamples env = sample_envelope(seg, config.samples_per_segment);
      out.left_skin[k] = std::move(env.plus);
      out.right_skin[k] = std::move(env.minus);
      out.mat_segments[k] = std::move(seg);
    } catch (const GeometryError& e) {
      out.diagnostics.push_back({DiagnosticKind::segment_failed, {k, k + 1}, std::nullopt,
                                 "segment " + std::to_string(k) + ": " + e.what()});
      continue;
    }
    for (OffsetSkins& off : out.offsets) {
      try {
        EnvelopeSamples env = sample_offsets(*out.mat_segments[k], off.distance, config.samples_per_segment);
        off.left[k] = std::move(env.plus);
        off.right[k] = std::move(env.minus);
      } catch (const GeometryError& e) {
        out.diagnostics.push_back({DiagnosticKind::offset_failed, {k, k + 1}, std::nullopt,
                                   "offset " + std::to_string(off.distance) + " on segment " + std::to_string(k) +
                                       ": " + e.what()});
      }
    }
  }

  for (int i = 1; i + 1 < n; ++i) {
    const auto& before = out.mat_segments[i - 1];
    const auto& after = out.mat_segments[i];
    Joint j{i, false, false};
    if (before && after) {
      try {
        j.left_g1 = detail::joint_is_g1(*before, *after, true, 1e2 * tol);
        j.right_g1 = detail::joint_is_g1(*before, *after, false, 1e2 * tol);
      } catch (const GeometryError&) {
      }
    }
    out.joints.push_back(j);
  }
  return out;
}

}  // namespace circleskin
