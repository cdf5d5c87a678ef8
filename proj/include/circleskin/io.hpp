#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "circleskin/planar.hpp"
#include "circleskin/skin.hpp"

namespace circleskin {

inline constexpr const char* kVersion = "1.0.0";

/// Malformed or invalid input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputDocument {
  std::vector<Circle> circles;
  SkinConfig config;
};

struct TouchPointRecord {
  int index = 0;
  Point2 plus;
  Point2 minus;
  bool available = true;
  friend bool operator==(const TouchPointRecord&, const TouchPointRecord&) = default;
};

struct DiagnosticRecord {
  std::string kind;
  std::vector<int> circles;
  std::optional<Point2> point;
  std::string message;
  friend bool operator==(const DiagnosticRecord&, const DiagnosticRecord&) = default;
};

struct ViolationRecord {
  int condition = 0;
  std::vector<int> circles;
  std::string description;
  bool interpreted = false;
  friend bool operator==(const ViolationRecord&, const ViolationRecord&) = default;
};

struct AdmissibilityRecord {
  bool ok = true;
  std::vector<ViolationRecord> violations;
  friend bool operator==(const AdmissibilityRecord&, const AdmissibilityRecord&) = default;
};

struct OffsetRecord {
  double distance = 0.0;
  std::vector<Polyline> left;
  std::vector<Polyline> right;
  friend bool operator==(const OffsetRecord&, const OffsetRecord&) = default;
};

struct JointRecord {
  int circle = 0;
  bool left_g1 = false;
  bool right_g1 = false;
  friend bool operator==(const JointRecord&, const JointRecord&) = default;
};

struct OutputDocument {
  std::string version = kVersion;
  std::vector<Polyline> left;   // per segment
  std::vector<Polyline> right;
  std::vector<TouchPointRecord> touch_points;
  std::vector<std::vector<SpacePoint>> mat;  // per segment, (x, y, r)
  std::vector<OffsetRecord> offsets;
  std::vector<JointRecord> joints;
  std::vector<DiagnosticRecord> diagnostics;
  AdmissibilityRecord admissibility;
  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

// JSON mapping --------------------------------------------------------------

inline void to_json(nlohmann::json& j, const Vec2& p) { j = nlohmann::json::array({p.x, p.y}); }
inline void from_json(const nlohmann::json& j, Vec2& p) {
  p.x = j.at(0).get<double>();
  p.y = j.at(1).get<double>();
}
inline void to_json(nlohmann::json& j, const Vec3& p) { j = nlohmann::json::array({p.x, p.y, p.z}); }
inline void from_json(const nlohmann::json& j, Vec3& p) {
  p.x = j.at(0).get<double>();
  p.y = j.at(1).get<double>();
  p.z = j.at(2).get<double>();
}

inline void to_json(nlohmann::json& j, const TouchPointRecord& r) {
  j = {{"index", r.index}, {"plus", r.plus}, {"minus", r.minus}, {"available", r.available}};
}
inline void from_json(const nlohmann::json& j, TouchPointRecord& r) {
  j.at("index").get_to(r.index);
  j.at("plus").get_to(r.plus);
  j.at("minus").get_to(r.minus);
  j.at("available").get_to(r.available);
}

inline void to_json(nlohmann::json& j, const DiagnosticRecord& r) {
  j = {{"kind", r.kind}, {"circles", r.circles}, {"message", r.message}};
  j["point"] = r.point ? nlohmann::json(*r.point) : nlohmann::json(nullptr);
}
inline void from_json(const nlohmann::json& j, DiagnosticRecord& r) {
  j.at("kind").get_to(r.kind);
  j.at("circles").get_to(r.circles);
  j.at("message").get_to(r.message);
  if (j.at("point").is_null()) r.point.reset();
  else r.point = j.at("point").get<Point2>();
}

inline void to_json(nlohmann::json& j, const ViolationRecord& r) {
  j = {{"condition", r.condition}, {"circles", r.circles}, {"description", r.description},
       {"interpreted", r.interpreted}};
}
inline void from_json(const nlohmann::json& j, ViolationRecord& r) {
  j.at("condition").get_to(r.condition);
  j.at("circles").get_to(r.circles);
  j.at("description").get_to(r.description);
  j.at("interpreted").get_to(r.interpreted);
}

inline void to_json(nlohmann::json& j, const AdmissibilityRecord& r) {
  j = {{"ok", r.ok}, {"violations", r.violations}};
}
inline void from_json(const nlohmann::json& j, AdmissibilityRecord& r) {
  j.at("ok").get_to(r.ok);
  j.at("violations").get_to(r.violations);
}

inline void to_json(nlohmann::json& j, const OffsetRecord& r) {
  j = {{"d", r.distance}, {"left", r.left}, {"right", r.right}};
}
inline void from_json(const nlohmann::json& j, OffsetRecord& r) {
  j.at("d").get_to(r.distance);
  j.at("left").get_to(r.left);
  j.at("right").get_to(r.right);
}

inline void to_json(nlohmann::json& j, const JointRecord& r) {
  j = {{"circle", r.circle}, {"left_g1", r.left_g1}, {"right_g1", r.right_g1}};
}
inline void from_json(const nlohmann::json& j, JointRecord& r) {
  j.at("circle").get_to(r.circle);
  j.at("left_g1").get_to(r.left_g1);
  j.at("right_g1").get_to(r.right_g1);
}

inline void to_json(nlohmann::json& j, const OutputDocument& d) {
  j = {{"version", d.version},
       {"skins", {{"left", d.left}, {"right", d.right}}},
       {"touch_points", d.touch_points},
       {"mat", d.mat},
       {"offsets", d.offsets},
       {"joints", d.joints},
       {"diagnostics", d.diagnostics},
       {"admissibility", d.admissibility}};
}
inline void from_json(const nlohmann::json& j, OutputDocument& d) {
  j.at("version").get_to(d.version);
  j.at("skins").at("left").get_to(d.left);
  j.at("skins").at("right").get_to(d.right);
  j.at("touch_points").get_to(d.touch_points);
  j.at("mat").get_to(d.mat);
  j.at("offsets").get_to(d.offsets);
  j.at("joints").get_to(d.joints);
  j.at("diagnostics").get_to(d.diagnostics);
  j.at("admissibility").get_to(d.admissibility);
}

inline AdmissibilityRecord to_record(const AdmissibilityReport& r) {
  AdmissibilityRecord out{r.ok, {}};
  for (const Violation& v : r.violations)
    out.violations.push_back({v.condition, v.circles, v.description, v.interpreted});
  return out;
}

// Input ---------------------------------------------------------------------

inline SkinMode parse_mode(std::string_view s) {
  if (s == "inverse") return SkinMode::inverse;
  if (s == "baseline") return SkinMode::baseline;
  throw InputError("unknown mode '" + std::string(s) + "' (expected inverse or baseline)");
}

inline SpineKind parse_spine(std::string_view s) {
  if (s == "cubic") return SpineKind::cubic;
  if (s == "ph") return SpineKind::ph;
  throw InputError("unknown spine '" + std::string(s) + "' (expected cubic or ph)");
}

/// Parses and validates an input document.
inline InputDocument parse_input(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  InputDocument doc;
  try {
    if (!j.is_object() || !j.contains("circles") || !j.at("circles").is_array())
      throw InputError("document must be an object with a 'circles' array");
    const auto& arr = j.at("circles");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& c = arr[i];
      Circle circle{{c.at("x").get<double>(), c.at("y").get<double>()}, c.at("r").get<double>()};
      if (!(circle.radius > 0.0))
        throw InputError("circle " + std::to_string(i) + ": radius must be positive");
      doc.circles.push_back(circle);
    }
    if (doc.circles.size() < 2) throw InputError("need at least two circles");
    if (j.contains("config")) {
      const auto& c = j.at("config");
      SkinConfig& cfg = doc.config;
      if (c.contains("mode")) cfg.mode = parse_mode(c.at("mode").get<std::string>());
      if (c.contains("lambda")) cfg.lambda = c.at("lambda").get<double>();
      if (c.contains("spine")) cfg.spine = parse_spine(c.at("spine").get<std::string>());
      if (c.contains("samples")) cfg.samples_per_segment = c.at("samples").get<int>();
      if (c.contains("offsets")) cfg.offsets = c.at("offsets").get<std::vector<double>>();
      if (c.contains("validate")) cfg.validate = c.at("validate").get<bool>();
      if (c.contains("epsilon")) cfg.epsilon = c.at("epsilon").get<double>();
      if (c.contains("interpret_segment_conditions"))
        cfg.interpret_segment_conditions = c.at("interpret_segment_conditions").get<bool>();
    }
    validate_config(doc.config);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return doc;
}

// Output --------------------------------------------------------------------

inline OutputDocument make_output(const SkinResult& r, const SkinConfig& config) {
  OutputDocument d;
  d.left = r.left_skin;
  d.right = r.right_skin;
  for (std::size_t i = 0; i < r.touch_plan.points.size(); ++i) {
    const TouchPoints& w = r.touch_plan.points[i];
    d.touch_points.push_back({static_cast<int>(i), w.plus, w.minus, w.available});
  }
  for (const auto& seg : r.mat_segments) {
    std::vector<SpacePoint> samples;
    if (seg) {
      const int n = config.samples_per_segment;
      for (int k = 0; k < n; ++k) samples.push_back(seg->point(static_cast<double>(k) / (n - 1)));
    }
    d.mat.push_back(std::move(samples));
  }
  for (const OffsetSkins& o : r.offsets) d.offsets.push_back({o.distance, o.left, o.right});
  for (const Joint& jt : r.joints) d.joints.push_back({jt.circle, jt.left_g1, jt.right_g1});
  for (const Diagnostic& g : r.diagnostics) d.diagnostics.push_back({to_string(g.kind), g.circles, g.point, g.message});
  d.admissibility = to_record(r.admissibility);
  return d;
}

/// Full computation shared by the CLI and the service.
inline OutputDocument run_document(const InputDocument& doc) {
  return make_output(skin(doc.circles, doc.config), doc.config);
}

namespace detail {

inline std::string fmt_num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

inline void append_path(std::ostringstream& os, const std::vector<std::vector<Point2>>& pieces,
                        const char* attrs) {
  std::string d;
  for (const auto& piece : pieces) {
    for (std::size_t k = 0; k < piece.size(); ++k) {
      d += (k == 0 ? (d.empty() ? "M" : " M") : " L");
      d += fmt_num(piece[k].x) + "," + fmt_num(-piece[k].y);
    }
  }
  os << "<path d=\"" << d << "\" " << attrs << "/>\n";
}

}  // namespace detail

/// SVG rendering. Layers in fixed order, y axis flipped for display.
inline std::string render_svg(std::span<const Circle> circles, const OutputDocument& doc) {
  using detail::fmt_num;
  double lo_x = 0, lo_y = 0, hi_x = 0, hi_y = 0;
  bool first = true;
  const auto grow = [&](double x, double y) {
    if (first) lo_x = hi_x = x, lo_y = hi_y = y, first = false;
    lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
  };
  for (const Circle& c : circles) {
    grow(c.center.x - c.radius, -(c.center.y + c.radius));
    grow(c.center.x + c.radius, -(c.center.y - c.radius));
  }
  for (const auto* skins : {&doc.left, &doc.right})
    for (const auto& piece : *skins)
      for (const Point2& p : piece) grow(p.x, -p.y);
  for (const auto& off : doc.offsets)
    for (const auto* skins : {&off.left, &off.right})
      for (const auto& piece : *skins)
        for (const Point2& p : piece) grow(p.x, -p.y);
  const double diam = std::max(std::hypot(hi_x - lo_x, hi_y - lo_y), 1e-9);
  const double pad = 0.05 * diam;
  const double stroke = 0.003 * diam;
  const double marker = 0.008 * diam;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt_num(lo_x - pad) << " "
     << fmt_num(lo_y - pad) << " " << fmt_num(hi_x - lo_x + 2 * pad) << " " << fmt_num(hi_y - lo_y + 2 * pad)
     << "\">\n";

  os << "<g id=\"circles\" fill=\"none\" stroke=\"#555555\" stroke-width=\"" << fmt_num(stroke) << "\">\n";
  for (const Circle& c : circles)
    os << "<circle cx=\"" << fmt_num(c.center.x) << "\" cy=\"" << fmt_num(-c.center.y) << "\" r=\""
       << fmt_num(c.radius) << "\"/>\n";
  os << "</g>\n";

  os << "<g id=\"mat\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"" << fmt_num(4 * stroke)
     << "\" stroke-width=\"" << fmt_num(stroke) << "\">\n";
  std::vector<Polyline> mat;
  for (const auto& seg : doc.mat) {
    Polyline piece;
    for (const SpacePoint& p : seg) piece.push_back(p.down());
    mat.push_back(std::move(piece));
  }
  detail::append_path(os, mat, "");
  os << "</g>\n";

  os << "<g id=\"skin-left\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" << fmt_num(stroke) << "\">\n";
  detail::append_path(os, doc.left, "");
  os << "</g>\n";
  os << "<g id=\"skin-right\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" << fmt_num(stroke) << "\">\n";
  detail::append_path(os, doc.right, "");
  os << "</g>\n";

  os << "<g id=\"touchpoints\" stroke=\"none\">\n";
  for (const TouchPointRecord& t : doc.touch_points) {
    if (!t.available) continue;
    os << "<circle cx=\"" << fmt_num(t.plus.x) << "\" cy=\"" << fmt_num(-t.plus.y) << "\" r=\"" << fmt_num(marker)
       << "\" fill=\"#1f77b4\"/>\n";
    os << "<circle cx=\"" << fmt_num(t.minus.x) << "\" cy=\"" << fmt_num(-t.minus.y) << "\" r=\""
       << fmt_num(marker) << "\" fill=\"#d62728\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"offsets\" fill=\"none\" stroke=\"#aaaaaa\" stroke-width=\"" << fmt_num(stroke / 2) << "\">\n";
  for (const OffsetRecord& o : doc.offsets) {
    detail::append_path(os, o.left, "class=\"offset-left\"");
    detail::append_path(os, o.right, "class=\"offset-right\"");
  }
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace circleskin
