#pragma once

// Independent reference computations for the tests. Nothing here calls the
// construction being checked.

#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "circleskin/core.hpp"
#include "circleskin/planar.hpp"
#include "circleskin/polynomial.hpp"

namespace circleskin::oracle {

/// Newton iteration on |X - O_j| = R + sign * r_j, j = 1..3.
/// Returns (center, R) or nullopt when it does not converge.
inline std::optional<std::pair<Point2, double>> apollonius_newton(const std::array<Circle, 3>& cs, double sign,
                                                                   Point2 x, double r) {
  for (int it = 0; it < 100; ++it) {
    double f[3], jac[3][3];
    for (int j = 0; j < 3; ++j) {
      const Vec2 d = x - cs[j].center;
      const double len = norm(d);
      f[j] = len - (r + sign * cs[j].radius);
      jac[j][0] = d.x / len;
      jac[j][1] = d.y / len;
      jac[j][2] = -1.0;
    }
    // Cramer's rule on the 3x3 system J delta = -f.
    const auto det3 = [](double m[3][3]) {
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    const double det = det3(jac);
    if (std::abs(det) < 1e-300) return std::nullopt;
    double delta[3];
    for (int c = 0; c < 3; ++c) {
      double m[3][3];
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) m[i][k] = (k == c) ? -f[i] : jac[i][k];
      delta[c] = det3(m) / det;
    }
    x.x += delta[0];
    x.y += delta[1];
    r += delta[2];
    if (std::abs(delta[0]) + std::abs(delta[1]) + std::abs(delta[2]) < 1e-15) return std::pair{x, r};
  }
  return std::nullopt;
}

/// Square root of a polynomial by matching coefficients from the top down.
/// Returns the relative remainder max|p - q^2| / max|p|, or +inf when the
/// degree is odd or the leading coefficient negative.
inline double square_root_residual(const Polynomial& p, double trim = 1e-13) {
  std::vector<double> c(p.coefficients().begin(), p.coefficients().end());
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  while (!c.empty() && std::abs(c.back()) <= trim * scale) c.pop_back();
  if (c.empty()) return 0.0;
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg % 2 != 0 || c.back() < 0.0) return INFINITY;
  const int m = deg / 2;
  std::vector<double> q(m + 1, 0.0);
  q[m] = std::sqrt(c[deg]);
  for (int k = 1; k <= m; ++k) {
    // coefficient of t^(2m-k) in q^2 involves q[m-k] * q[m] twice plus
    // products of already known higher coefficients.
    double acc = c[deg - k];
    for (int i = m - k + 1; i <= m; ++i) {
      const int j = deg - k - i;
      if (j > m - k && j <= m) acc -= q[i] * q[j];
    }
    q[m - k] = acc / (2.0 * q[m]);
  }
  const Polynomial qp(q);
  const Polynomial rem = p - qp * qp;
  double worst = 0.0;
  for (double v : rem.coefficients()) worst = std::max(worst, std::abs(v));
  return worst / scale;
}

/// Central difference of a planar curve.
template <class F>
Vec2 central_difference(F&& f, double t, double h = 1e-5) {
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

inline double angle_between(Vec2 a, Vec2 b) { return std::atan2(std::abs(cross(a, b)), dot(a, b)); }

inline double angle_between(Vec3 a, Vec3 b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

/// Random ordered chain of circles that stays well clear of the degenerate
/// cases: neighbors overlap at most mildly and the chain bends by less than
/// `max_turn` per step.
inline std::vector<Circle> random_chain(std::mt19937_64& rng, int n, double max_turn = 0.8) {
  std::uniform_real_distribution<double> radius(0.5, 1.5), turn(-max_turn, max_turn), gap(1.1, 1.8),
      heading(0.0, 2.0 * 3.141592653589793);
  std::vector<Circle> out;
  double dir = heading(rng);
  Circle c{{0.0, 0.0}, radius(rng)};
  out.push_back(c);
  for (int i = 1; i < n; ++i) {
    const double r = radius(rng);
    const double step = gap(rng) * (c.radius + r);
    dir += turn(rng);
    c = Circle{c.center + step * Vec2{std::cos(dir), std::sin(dir)}, r};
    out.push_back(c);
  }
  return out;
}

}  // namespace circleskin::oracle
