#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circleskin/core.hpp"
#include "circleskin/minkowski.hpp"
#include "circleskin/planar.hpp"
#include "circleskin/polynomial.hpp"

namespace circleskin {

enum class SpineKind { cubic, ph };

/// One rational-envelope piece of a medial axis transform between two lifted
/// circles. The spine x(t) is the plus envelope branch; the axis is its
/// one-sided offset y = x + f rotate_cw(x') and the radius is r = f |x'|.
class RESegment {
 public:
  RESegment() = default;
  RESegment(PolyCurve2 spine, Polynomial profile, std::array<SpacePoint, 2> endpoints,
            std::array<SpaceVector, 2> end_tangents, std::array<Vector2, 2> env_tangents, bool is_ph)
      : spine_(std::move(spine)),
        profile_(std::move(profile)),
        endpoints_(endpoints),
        end_tangents_(end_tangents),
        env_tangents_(env_tangents),
        is_ph_(is_ph),
        spine_d1_(spine_.derivative()),
        spine_d2_(spine_d1_.derivative()),
        profile_d1_(profile_.derivative()),
        axis_{spine_.x + profile_ * spine_d1_.y, spine_.y - profile_ * spine_d1_.x} {}

  const PolyCurve2& spine() const { return spine_; }
  const Polynomial& profile() const { return profile_; }
  const std::array<SpacePoint, 2>& endpoints() const { return endpoints_; }
  const std::array<SpaceVector, 2>& end_tangents() const { return end_tangents_; }
  const std::array<Vector2, 2>& env_tangents() const { return env_tangents_; }
  bool is_ph() const { return is_ph_; }

  /// Planar medial axis as a polynomial curve.
  const PolyCurve2& axis() const { return axis_; }

  MatSample sample(double t) const {
    const Vec2 d1 = spine_d1_(t);
    const Vec2 d2 = spine_d2_(t);
    const double f = profile_(t);
    const double df = profile_d1_(t);
    const double speed = norm(d1);
    MatSample s;
    s.position = axis_(t);
    s.radius = f * speed;
    s.velocity = d1 + df * rotate_cw(d1) + f * rotate_cw(d2);
    s.radius_rate = df * speed + (speed > 0.0 ? f * dot(d1, d2) / speed : 0.0);
    return s;
  }

  SpacePoint point(double t) const {
    const MatSample s = sample(t);
    return {s.position.x, s.position.y, s.radius};
  }

  SpaceVector derivative(double t) const {
    const MatSample s = sample(t);
    return {s.velocity.x, s.velocity.y, s.radius_rate};
  }

 private:
  PolyCurve2 spine_;
  Polynomial profile_;
  std::array<SpacePoint, 2> endpoints_{};
  std::array<SpaceVector, 2> end_tangents_{};
  std::array<Vector2, 2> env_tangents_{};
  bool is_ph_ = false;
  PolyCurve2 spine_d1_;
  PolyCurve2 spine_d2_;
  Polynomial profile_d1_;
  PolyCurve2 axis_;
};

struct SegmentOptions {
  SpineKind spine = SpineKind::cubic;
  /// Tangent lengths at the two ends; taken from the radical line when absent.
  std::optional<std::array<double, 2>> alphas;
  double eps = kDefaultEpsilon;
  int validity_grid = 256;
};

struct EnvelopeSamples {
  std::vector<double> params;
  std::vector<Point2> plus;
  std::vector<Point2> minus;
};

/// Envelope tangent at touching point q of the circle p, with length alpha,
/// oriented to run along `forward`.
inline Vector2 envelope_tangent(const SpacePoint& p, Point2 q, double alpha, Vector2 forward) {
  if (alpha == 0.0) throw GeometryError("tangent length must be non-zero");
  const Vec2 radial = p.down() - q;
  const double len = norm(radial);
  if (len == 0.0) throw GeometryError("touching point coincides with the circle center");
  Vector2 v = (alpha / len) * rotate_cw(radial);
  if (dot(v, forward) < 0.0) v = -v;
  return v;
}

/// Tangent lengths: twice the distance from each touching point to the
/// radical line of the two circles.
inline std::pair<double, double> tangent_lengths(const Circle& c_i, const Circle& c_next, Point2 q_i,
                                                 Point2 q_next, double eps = kDefaultEpsilon) {
  const Line2 l = radical_line(c_i, c_next, eps);
  const double a = 2.0 * l.distance_to(q_i);
  const double b = 2.0 * l.distance_to(q_next);
  if (!(a > 0.0) || !(b > 0.0)) throw GeometryError("touching point lies on the radical line: zero tangent length");
  return {a, b};
}

inline PolyCurve2 hermite_spine(Point2 q0, Vector2 v0, Point2 q1, Vector2 v1) {
  return {cubic_hermite(q0.x, v0.x, q1.x, v1.x), cubic_hermite(q0.y, v0.y, q1.y, v1.y)};
}

struct PhSpine {
  PolyCurve2 curve;
  int selected = 0;                  // index into the sign enumeration
  std::array<double, 4> energies{};  // sampled bending energy per candidate
};

namespace detail {

// Sampled bending energy: integral of curvature^2 ds by the midpoint rule.
inline double bending_energy(const PolyCurve2& c, int samples = 64) {
  const PolyCurve2 d1 = c.derivative();
  const PolyCurve2 d2 = d1.derivative();
  double sum = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = (k + 0.5) / samples;
    const Vec2 a = d1(t);
    const Vec2 b = d2(t);
    const double speed = norm(a);
    if (speed == 0.0) return std::numeric_limits<double>::infinity();
    const double kappa = cross(a, b) / (speed * speed * speed);
    sum += kappa * kappa * speed;
  }
  return sum / samples;
}

}  // namespace detail

/// Pythagorean-hodograph quintic with the given first-order Hermite data.
///
/// With complex numbers x'(t) = w(t)^2 for a quadratic w with Bernstein
/// coefficients w0, w1, w2: w0^2 = v0, w2^2 = v1, and integrating w^2 over
/// [0, 1] gives 2 w1^2 + 3 (w0 + w2) w1 + 3 w0^2 + 3 w2^2 + w0 w2 = 15 (q1 - q0).
/// The two signs of w2 and the two roots for w1 give four candidates; the one
/// with least bending energy wins, ties going to the lower index.
inline PhSpine ph_spine(Point2 q0, Vector2 v0, Point2 q1, Vector2 v1) {
  using C = std::complex<double>;
  if (norm(v0) == 0.0 || norm(v1) == 0.0) throw GeometryError("PH spine needs non-zero end tangents");
  const C d0{v0.x, v0.y}, d1{v1.x, v1.y}, dp{q1.x - q0.x, q1.y - q0.y};
  const C w0 = std::sqrt(d0);

  PhSpine best;
  double best_energy = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 4; ++k) {
    const C w2 = (k < 2 ? 1.0 : -1.0) * std::sqrt(d1);
    const C root = std::sqrt(120.0 * dp - 15.0 * (d0 + d1) + 10.0 * w0 * w2);
    const C w1 = (-3.0 * (w0 + w2) + (k % 2 == 0 ? 1.0 : -1.0) * root) / 4.0;

    // Power basis w(t) = a + b t + c t^2, then x'(t) = w(t)^2.
    const C a = w0, b = 2.0 * (w1 - w0), c = w0 - 2.0 * w1 + w2;
    const std::array<C, 5> h{a * a, 2.0 * a * b, b * b + 2.0 * a * c, 2.0 * b * c, c * c};
    std::vector<double> hx(5), hy(5);
    for (std::size_t j = 0; j < 5; ++j) hx[j] = h[j].real(), hy[j] = h[j].imag();
    const PolyCurve2 curve{Polynomial(hx).antiderivative(q0.x), Polynomial(hy).antiderivative(q0.y)};

    const double e = detail::bending_energy(curve);
    best.energies[k] = e;
    if (e < best_energy) {
      best_energy = e;
      best.curve = curve;
      best.selected = k;
    }
  }
  if (!std::isfinite(best_energy)) throw GeometryError("PH spine: every candidate has a singular point");
  return best;
}

/// Cubic f(t) whose values and slopes at the ends make the lifted axis
/// interpolate P_i with tangent direction t_i.
inline Polynomial radius_profile(const SpacePoint& p0, const SpacePoint& p1, const SpaceVector& t0,
                                 const SpaceVector& t1, const PolyCurve2& spine, Vector2 v0, Vector2 v1,
                                 double eps = kDefaultEpsilon) {
  const PolyCurve2 d2 = spine.derivative().derivative();
  const auto end = [&](const SpacePoint& p, const SpaceVector& t, Vector2 v, double at) {
    const Vec2 td = t.down();
    const double denom = dot(td, v);
    if (std::abs(denom) <= eps * norm(td) * norm(v))
      throw GeometryError("tangent/envelope-tangent orthogonality: radius profile undefined");
    const double f = p.z / norm(v);
    const double df = -dot(td, f * d2(at) - rotate_cw(v)) / denom;
    return std::pair{f, df};
  };
  const auto [f0, df0] = end(p0, t0, v0, 0.0);
  const auto [f1, df1] = end(p1, t1, v1, 1.0);
  return cubic_hermite(f0, df0, f1, df1);
}

/// Builds the segment between lifted circles p0 and p1 with Hermite tangents
/// t0 and t1. The touching points are the plus branches at each end.
inline RESegment build_re_segment(const SpacePoint& p0, const SpacePoint& p1, const SpaceVector& t0,
                                  const SpaceVector& t1, const SegmentOptions& opt = {}) {
  const Point2 q0 = envelope_points_from_hermite(p0, t0).plus;
  const Point2 q1 = envelope_points_from_hermite(p1, t1).plus;
  const auto [a0, a1] = opt.alphas ? std::pair{(*opt.alphas)[0], (*opt.alphas)[1]}
                                   : tangent_lengths(unlift(p0), unlift(p1), q0, q1, opt.eps);
  const Vector2 forward = p1.down() - p0.down();
  const Vector2 v0 = envelope_tangent(p0, q0, a0, forward);
  const Vector2 v1 = envelope_tangent(p1, q1, a1, forward);

  const bool ph = opt.spine == SpineKind::ph;
  PolyCurve2 spine = ph ? ph_spine(q0, v0, q1, v1).curve : hermite_spine(q0, v0, q1, v1);
  Polynomial profile = radius_profile(p0, p1, t0, t1, spine, v0, v1, opt.eps);
  RESegment seg(std::move(spine), std::move(profile), {p0, p1}, {t0, t1}, {v0, v1}, ph);

  for (int k = 0; k < opt.validity_grid; ++k) {
    const double t = static_cast<double>(k) / (opt.validity_grid - 1);
    const MatSample s = seg.sample(t);
    const double speed2 = norm2(s.velocity);
    if (!(s.radius > 0.0))
      throw GeometryError("envelope validity lost: non-positive radius at t=" + std::to_string(t));
    if (speed2 - s.radius_rate * s.radius_rate < -1e-12 * speed2)
      throw GeometryError("envelope validity lost at t=" + std::to_string(t));
  }
  return seg;
}

/// Uniform samples of both envelope branches.
inline EnvelopeSamples sample_envelope(const RESegment& seg, int n) {
  if (n < 2) throw GeometryError("need at least two samples");
  EnvelopeSamples out;
  out.params.reserve(n);
  out.plus.reserve(n);
  out.minus.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / (n - 1);
    EnvelopePair e;
    try {
      e = envelope_eval(seg.sample(t));
    } catch (const GeometryError& err) {
      throw GeometryError(std::string(err.what()) + " at t=" + std::to_string(t));
    }
    out.params.push_back(t);
    out.plus.push_back(e.plus);
    out.minus.push_back(e.minus);
  }
  return out;
}

/// Envelopes of the family with every radius grown by d.
inline EnvelopeSamples sample_offsets(const RESegment& seg, double d, int n) {
  if (n < 2) throw GeometryError("need at least two samples");
  EnvelopeSamples out;
  for (int k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / (n - 1);
    MatSample s = seg.sample(t);
    s.radius += d;
    if (!(s.radius > 0.0)) throw GeometryError("offset collapses at t=" + std::to_string(t));
    EnvelopePair e;
    try {
      e = envelope_eval(s);
    } catch (const GeometryError& err) {
      throw GeometryError(std::string(err.what()) + " at t=" + std::to_string(t));
    }
    out.params.push_back(t);
    out.plus.push_back(e.plus);
    out.minus.push_back(e.minus);
  }
  return out;
}

}  // namespace circleskin
