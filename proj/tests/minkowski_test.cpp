#include <gtest/gtest.h>

#include <random>

#include "circleskin/minkowski.hpp"

namespace cs = circleskin;
using cs::Point2;
using cs::SpacePoint;
using cs::SpaceVector;

TEST(Lift, CopiesCenterAndRadius) {
  EXPECT_EQ(cs::lift({{0, 0}, 1}), (SpacePoint{0, 0, 1}));
  EXPECT_EQ(cs::lift({{2, -3}, 0.5}), (SpacePoint{2, -3, 0.5}));
  EXPECT_EQ(cs::lift({{0, 0}, 0.123456789}).z, 0.123456789);
}

TEST(IsSpaceLike, Examples) {
  EXPECT_TRUE(cs::is_space_like({1, 0, 0.5}));
  EXPECT_FALSE(cs::is_space_like({1, 0, 1}));
  EXPECT_FALSE(cs::is_space_like({0, 0, 1}));
}

TEST(EnvelopeEval, ConstantRadiusLineGivesParallelLines) {
  for (double t : {-1.0, 0.0, 2.5}) {
    const auto e = cs::envelope_eval({{t, 0}, 1.0, {1, 0}, 0.0});
    EXPECT_NEAR(e.plus.x, t, 1e-15);
    EXPECT_NEAR(e.plus.y, 1, 1e-15);
    EXPECT_NEAR(e.minus.x, t, 1e-15);
    EXPECT_NEAR(e.minus.y, -1, 1e-15);
  }
}

TEST(EnvelopeEval, ConeOfCirclesMatchesTangentLines) {
  // y = (t, 0), r = t / 2 at t = 1.
  const auto e = cs::envelope_eval({{1, 0}, 0.5, {1, 0}, 0.5});
  // Oracle: the envelope lines through the origin have slope +-1/sqrt(3)
  // (sin of the half angle is 1/2); the touching point is the foot of the
  // perpendicular from the center onto them.
  const double slope = 1.0 / std::sqrt(3.0);
  for (const auto& [p, s] : {std::pair{e.plus, slope}, std::pair{e.minus, -slope}}) {
    EXPECT_NEAR(p.y - s * p.x, 0.0, 1e-12);
    EXPECT_NEAR(cs::distance(p, {1, 0}), 0.5, 1e-12);
  }
  EXPECT_NEAR(e.plus.x, 0.75, 1e-12);
  EXPECT_NEAR(e.plus.y, 0.4330127018922193, 1e-12);
  EXPECT_NEAR(e.minus.y, -0.4330127018922193, 1e-12);
}

TEST(EnvelopeEval, Errors) {
  EXPECT_THROW(cs::envelope_eval({{0, 0}, 1, {1, 0}, 2}), cs::GeometryError);
  EXPECT_THROW(cs::envelope_eval({{0, 0}, 1, {0, 0}, 0}), cs::GeometryError);
}

TEST(EnvelopeEval, BranchesCoincideOnlyWhenLightLike) {
  const auto light = cs::envelope_eval({{0, 0}, 1, {1, 0}, 1});
  EXPECT_EQ(light.plus, light.minus);
  const auto space = cs::envelope_eval({{0, 0}, 1, {1, 0}, 0.999});
  EXPECT_NE(space.plus, space.minus);
}

TEST(EnvelopeFromHermite, Examples) {
  const SpacePoint p{0, 0, 1};
  const auto a = cs::envelope_points_from_hermite(p, {1, 0, 0});
  EXPECT_NEAR(a.plus.x, 0, 1e-15);
  EXPECT_NEAR(a.plus.y, 1, 1e-15);
  EXPECT_NEAR(a.minus.y, -1, 1e-15);

  const auto b = cs::envelope_points_from_hermite(p, {1, 0, 0.5});
  EXPECT_NEAR(b.plus.x, -0.5, 1e-12);
  EXPECT_NEAR(b.plus.y, 0.8660254037844386, 1e-12);
  EXPECT_NEAR(b.minus.x, -0.5, 1e-12);
  EXPECT_NEAR(b.minus.y, -0.8660254037844386, 1e-12);
  // Oracle: both on the unit circle, and on the polar of the cone apex
  // (-2, 0), which is the chord x = -1/2.
  for (const Point2 q : {b.plus, b.minus}) EXPECT_NEAR(cs::norm(q), 1.0, 1e-12);

  const auto c = cs::envelope_points_from_hermite(p, {2, 0, 0});
  EXPECT_EQ(c.plus, a.plus);
  EXPECT_EQ(c.minus, a.minus);

  EXPECT_THROW(cs::envelope_points_from_hermite(p, {1, 0, 2}), cs::GeometryError);
}

TEST(EnvelopeFromHermite, RandomPropertiesHold) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> pos(-10, 10), rad(0.05, 5), comp(-1, 1), frac(-0.999, 0.999),
      lambda(0.01, 100);
  for (int k = 0; k < 10000; ++k) {
    const SpacePoint p{pos(rng), pos(rng), rad(rng)};
    cs::Vec2 d{comp(rng), comp(rng)};
    if (cs::norm(d) < 1e-3) continue;
    const SpaceVector t{d.x, d.y, frac(rng) * cs::norm(d)};
    const auto q = cs::envelope_points_from_hermite(p, t);
    // On the circle.
    EXPECT_NEAR(cs::distance(q.plus, p.down()), p.z, 1e-9);
    EXPECT_NEAR(cs::distance(q.minus, p.down()), p.z, 1e-9);
    // Plus is left of travel.
    EXPECT_GT(cs::cross(t.down(), q.plus - p.down()), 0.0);
    // Positive scaling does not move the points.
    const auto s = cs::envelope_points_from_hermite(p, lambda(rng) * t);
    EXPECT_NEAR(cs::distance(s.plus, q.plus), 0.0, 1e-9);
    EXPECT_NEAR(cs::distance(s.minus, q.minus), 0.0, 1e-9);
  }
}
