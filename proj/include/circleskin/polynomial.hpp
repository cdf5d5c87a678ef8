#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "circleskin/core.hpp"

namespace circleskin {

/// Real polynomial in the power basis, coefficients in ascending order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) {}

  static Polynomial constant(double v) { return Polynomial({v}); }

  std::span<const double> coefficients() const { return c_; }
  double coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }

  /// Index of the highest non-zero coefficient; 0 for the zero polynomial.
  int degree() const {
    for (std::size_t k = c_.size(); k-- > 0;)
      if (c_[k] != 0.0) return static_cast<int>(k);
    return 0;
  }

  double operator()(double t) const {
    double acc = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return constant(0.0);
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Polynomial(std::move(d));
  }

  /// Antiderivative with value `at_zero` at t = 0.
  Polynomial antiderivative(double at_zero = 0.0) const {
    std::vector<double> a(c_.size() + 1);
    a[0] = at_zero;
    for (std::size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / static_cast<double>(k + 1);
    return Polynomial(std::move(a));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> s(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = a.coefficient(k) + b.coefficient(k);
    return Polynomial(std::move(s));
  }
  friend Polynomial operator-(const Polynomial& a) { return -1.0 * a; }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(double s, const Polynomial& a) {
    std::vector<double> r(a.c_);
    for (double& v : r) v *= s;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return constant(0.0);
    std::vector<double> r(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

 private:
  std::vector<double> c_;
};

/// Cubic with p(0) = p0, p'(0) = m0, p(1) = p1, p'(1) = m1.
inline Polynomial cubic_hermite(double p0, double m0, double p1, double m1) {
  return Polynomial({p0, m0, 3.0 * (p1 - p0) - 2.0 * m0 - m1, 2.0 * (p0 - p1) + m0 + m1});
}

/// Planar polynomial curve on [0, 1].
struct PolyCurve2 {
  Polynomial x;
  Polynomial y;

  Point2 operator()(double t) const { return {x(t), y(t)}; }
  PolyCurve2 derivative() const { return {x.derivative(), y.derivative()}; }
  int degree() const { return std::max(x.degree(), y.degree()); }
};

}  // namespace circleskin
