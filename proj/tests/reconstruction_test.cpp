#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "circleskin/reconstruction.hpp"
#include "support/oracles.hpp"

namespace cs = circleskin;
using cs::Circle;
using cs::Point2;
using cs::SpacePoint;
using cs::SpaceVector;

namespace {

// Where the line through P along t meets z = 0.
Point2 pierce(const SpacePoint& p, const SpaceVector& t) { return p.down() - (p.z / t.z) * t.down(); }

cs::ReconstructionInput input_from(const SpacePoint& p, const SpaceVector& t) {
  const auto q = cs::envelope_points_from_hermite(p, t);
  return {cs::unlift(p), q.plus, q.minus};
}

}  // namespace

TEST(Apex, UnitCircleExamples) {
  const SpacePoint p{0, 0, 1};
  for (const SpaceVector t : {SpaceVector{1, 0, 0.5}, SpaceVector{1, 0.2, 0.5}}) {
    const auto in = input_from(p, t);
    const Point2 want = pierce(p, t);
    const Point2 s = cs::construct_apex(in);
    EXPECT_NEAR(s.x, want.x, 1e-12);
    EXPECT_NEAR(s.y, want.y, 1e-12);
    const Point2 c = cs::apex_closed_form(in);
    EXPECT_NEAR(c.x, want.x, 1e-12);
    EXPECT_NEAR(c.y, want.y, 1e-12);
  }
  const Point2 s = cs::construct_apex(input_from(p, {1, 0.2, 0.5}));
  EXPECT_NEAR(s.x, -2.0, 1e-12);
  EXPECT_NEAR(s.y, -0.4, 1e-12);
}

TEST(Apex, DiametralPointsHaveNoApex) {
  const cs::ReconstructionInput in{{{0, 0}, 1}, {0, 1}, {0, -1}};
  EXPECT_THROW(cs::construct_apex(in), cs::GeometryError);
  EXPECT_THROW(cs::apex_closed_form(in), cs::GeometryError);
}

TEST(ReconstructTangent, Examples) {
  const Circle c{{0, 0}, 1};
  const double h = std::sqrt(3.0) / 2.0;
  const auto r = cs::reconstruct_tangent({c, {-0.5, h}, {-0.5, -h}});
  EXPECT_FALSE(r.degenerate);
  EXPECT_NEAR(r.tangent.x, 2 / std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(r.tangent.y, 0, 1e-12);
  EXPECT_NEAR(r.tangent.z, 1 / std::sqrt(5.0), 1e-12);
  ASSERT_TRUE(r.apex.has_value());
  EXPECT_NEAR(r.apex->x, -2, 1e-12);

  const auto d = cs::reconstruct_tangent({c, {0, 1}, {0, -1}});
  EXPECT_TRUE(d.degenerate);
  EXPECT_FALSE(d.apex.has_value());
  EXPECT_NEAR(d.tangent.x, 1, 1e-15);
  EXPECT_NEAR(d.tangent.y, 0, 1e-15);
  EXPECT_NEAR(d.tangent.z, 0, 1e-15);

  // Swapping the labels reverses travel.
  const auto s = cs::reconstruct_tangent({c, {0, -1}, {0, 1}});
  EXPECT_NEAR(s.tangent.x, -1, 1e-15);
}

TEST(ReconstructTangent, RejectsBadInput) {
  const Circle c{{0, 0}, 1};
  EXPECT_THROW(cs::reconstruct_tangent({c, {0, 1}, {0, 1}}), cs::GeometryError);
  EXPECT_THROW(cs::reconstruct_tangent({c, {0, 1.1}, {0, -1}}), cs::GeometryError);
}

TEST(ReconstructTangent, RoundTripsRandomHermiteData) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> pos(-10, 10), rad(0.1, 5), comp(-1, 1), frac(-0.95, 0.95);
  int checked = 0;
  while (checked < 10000) {
    const SpacePoint p{pos(rng), pos(rng), rad(rng)};
    const cs::Vec2 d{comp(rng), comp(rng)};
    if (cs::norm(d) < 0.05) continue;
    const SpaceVector t{d.x, d.y, frac(rng) * cs::norm(d)};
    const auto in = input_from(p, t);
    const auto r = cs::reconstruct_tangent(in);
    const SpaceVector unit = t / cs::norm(t);
    EXPECT_LT(cs::norm(r.tangent - unit), 1e-8) << "trial " << checked;
    const auto back = cs::envelope_points_from_hermite(p, r.tangent);
    EXPECT_LT(cs::distance(back.plus, in.w_plus), 1e-8 * p.z);
    EXPECT_LT(cs::distance(back.minus, in.w_minus), 1e-8 * p.z);
    if (r.apex) {
      EXPECT_LT(cs::distance(*r.apex, cs::apex_closed_form(in)), 1e-8 * (1 + cs::norm(*r.apex)));
    }
    ++checked;
  }
}

TEST(ReconstructTangent, EquivariantUnderSimilarity) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> ang(0, 6.283185307179586), s(0.1, 10), sh(-5, 5), phi(0.3, 2.8);
  for (int k = 0; k < 1000; ++k) {
    const Circle c{{sh(rng), sh(rng)}, s(rng)};
    const double a = ang(rng), b = a + phi(rng);
    const Point2 wp = c.center + c.radius * cs::Vec2{std::cos(a), std::sin(a)};
    const Point2 wm = c.center + c.radius * cs::Vec2{std::cos(b), std::sin(b)};
    const auto r0 = cs::reconstruct_tangent({c, wp, wm});

    const double rot = ang(rng), scale = s(rng);
    const cs::Vec2 shift{sh(rng), sh(rng)};
    const auto map = [&](Point2 p) {
      return shift + scale * cs::Vec2{std::cos(rot) * p.x - std::sin(rot) * p.y, std::sin(rot) * p.x + std::cos(rot) * p.y};
    };
    const auto r1 = cs::reconstruct_tangent({{map(c.center), scale * c.radius}, map(wp), map(wm)});
    const cs::Vec2 td = r0.tangent.down();
    const cs::Vec2 rotated{std::cos(rot) * td.x - std::sin(rot) * td.y, std::sin(rot) * td.x + std::cos(rot) * td.y};
    EXPECT_LT(cs::norm(r1.tangent - SpaceVector{rotated.x, rotated.y, r0.tangent.z}), 1e-9);
  }
}
