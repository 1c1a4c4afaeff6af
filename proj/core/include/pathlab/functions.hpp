#pragma once

// Closed-form evaluators for the pathological functions. Everything here is
// pure and header-only; the catalog wraps these with domains and metadata.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace pathlab::fn {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A real number stored as sign and log-magnitude, for values that
/// underflow in double (exp(-1/x^4) near the origin).
struct SignedLog {
  int sign = 0;
  double log_abs = -kInf;

  double value() const noexcept { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

// ---------------------------------------------------------------------------
// x + a x^2 sin(1/x^2): differentiable, f'(0) = 1, not injective near 0.

inline double inj_fail(double x, double alpha) {
  if (x == 0.0) return 0.0;
  return x + alpha * x * x * std::sin(1.0 / (x * x));
}

inline double inj_fail_derivative(double x, double alpha) {
  if (x == 0.0) return 1.0;
  const double u = 1.0 / (x * x);
  return 1.0 + 2.0 * alpha * x * std::sin(u) - 2.0 * alpha / x * std::cos(u);
}

// Variant with sin(1/x) instead of sin(1/x^2).
inline double inj_fail_caption(double x, double alpha) {
  if (x == 0.0) return 0.0;
  return x + alpha * x * x * std::sin(1.0 / x);
}

inline double inj_fail_caption_derivative(double x, double alpha) {
  if (x == 0.0) return 1.0;
  const double u = 1.0 / x;
  return 1.0 + 2.0 * alpha * x * std::sin(u) - alpha * std::cos(u);
}

// ---------------------------------------------------------------------------
// x^4 (2 + sin(1/x)): strict minimum at 0 without monotone flanks.

inline double min_no_flank(double x) {
  if (x == 0.0) return 0.0;
  const double x2 = x * x;
  return x2 * x2 * (2.0 + std::sin(1.0 / x));
}

inline double min_no_flank_derivative(double x) {
  if (x == 0.0) return 0.0;
  const double u = 1.0 / x;
  return x * x * (8.0 * x + 4.0 * x * std::sin(u) - std::cos(u));
}

// ---------------------------------------------------------------------------
// x^3 + sgn(x) x^2 sin^2(1/x): crosses its tangent at 0, yet is neither convex
// nor concave on any one-sided neighbourhood.

inline double torsion_osc(double x) {
  if (x == 0.0) return 0.0;
  const double s = std::sin(1.0 / x);
  const double bump = x * x * s * s;
  return x * x * x + (x > 0.0 ? bump : -bump);
}

inline double torsion_osc_derivative(double x) {
  if (x == 0.0) return 0.0;
  const double u = 1.0 / x;
  const double s = std::sin(u);
  const double side = 2.0 * x * s * s - std::sin(2.0 * u);
  return 3.0 * x * x + (x > 0.0 ? side : -side);
}

// ---------------------------------------------------------------------------
// |cos u|^(u^p) / u^q, the integrand after substituting u = 1/t.
// p = 1, q = 2 gives the bounded one-sided example; p = 2, q = 3/2 the
// unbounded one. Evaluated through exp/log with an exact zero at cos u = 0.

inline double cosine_power(double u, double exponent_power, double weight_power) {
  const double c = std::fabs(std::cos(u));
  if (c == 0.0) return 0.0;
  const double exponent = exponent_power == 1.0 ? u : std::pow(u, exponent_power);
  const double log_value = exponent * std::log(c) - weight_power * std::log(u);
  return std::exp(log_value);  // flushes to 0 on underflow
}

/// |cos(1/t)|^(1/|t|), the derivative of the one-sided example; 0 at t = 0.
inline double onesided_integrand(double t) {
  if (t == 0.0) return 0.0;
  const double at = std::fabs(t);
  const double c = std::fabs(std::cos(1.0 / t));
  if (c == 0.0) return 0.0;
  return std::exp(std::log(c) / at);
}

/// |t|^(-1/2) |cos(1/t)|^(1/t^2); unbounded near 0, no value at 0 itself.
inline double onesided_unbounded_integrand(double t) {
  const double at = std::fabs(t);
  const double c = std::fabs(std::cos(1.0 / t));
  if (c == 0.0) return 0.0;
  return std::exp(std::log(c) / (at * at) - 0.5 * std::log(at));
}

// ---------------------------------------------------------------------------
// x sin(x^3): improper integral over [0, inf) converges, f is unbounded.

inline double improper_unbounded(double x) { return x * std::sin(x * x * x); }

inline double improper_unbounded_derivative(double x) {
  const double c = x * x * x;
  return std::sin(c) + 3.0 * c * std::cos(c);
}

// ---------------------------------------------------------------------------
// sin(x^3)/x: tends to 0 at infinity while f' is unbounded.

inline double decay_wild_deriv(double x) {
  if (x == 0.0) return 0.0;
  return std::sin(x * x * x) / x;
}

inline double decay_wild_deriv_derivative(double x) {
  if (x == 0.0) return 0.0;
  const double c = x * x * x;
  return 3.0 * x * std::cos(c) - std::sin(c) / (x * x);
}

// ---------------------------------------------------------------------------
// (5y - x^2)(y - x^2): strict minimum along every line, no minimum at 0.

namespace detail {

// s + err == a + b exactly.
inline void two_sum(double a, double b, double& s, double& err) {
  s = a + b;
  const double bb = s - a;
  err = (a - (s - bb)) + (b - bb);
}

}  // namespace detail

inline double parabola_trap(double x, double y) {
  // Both factors cancel near their parabolas, so each is carried as a
  // double-double built from the exact products x^2 and 5y.
  const double x2 = x * x;
  const double x2_lo = std::fma(x, x, -x2);
  const double y5 = 5.0 * y;
  const double y5_lo = std::fma(5.0, y, -y5);
  double a, a_lo, b, b_lo;
  detail::two_sum(y5, -x2, a, a_lo);
  a_lo += y5_lo - x2_lo;
  detail::two_sum(y, -x2, b, b_lo);
  b_lo -= x2_lo;
  const double p = a * b;
  return p + (std::fma(a, b, -p) + a * b_lo + a_lo * b);
}

inline std::array<double, 2> parabola_trap_gradient(double x, double y) {
  return {4.0 * x * x * x - 12.0 * x * y, 10.0 * y - 6.0 * x * x};
}

// ---------------------------------------------------------------------------
// g(x, y) + exp(-1/x^4) with g = +-exp(-1/x^2 - 1/(y - sin(1/x))^2) above/below
// the curve y = sin(1/x). Positive on the curve, takes both signs near 0.

inline SignedLog osc_curve_trap_log(double x, double y) {
  if (x == 0.0) return {};
  const double x2 = x * x;
  const double lift = 1.0 / (x2 * x2);  // f contains exp(-lift)
  const double d = y - std::sin(1.0 / x);
  if (d == 0.0) return {1, -lift};
  const double decay = 1.0 / x2 + 1.0 / (d * d);  // |g| = exp(-decay)
  if (d > 0.0) {
    const double lo = std::fmin(decay, lift);
    return {1, -lo + std::log1p(std::exp(-std::fabs(decay - lift)))};
  }
  if (decay == lift) return {};
  if (decay < lift) return {-1, -decay + std::log1p(-std::exp(-(lift - decay)))};
  return {1, -lift + std::log1p(-std::exp(-(decay - lift)))};
}

inline double osc_curve_trap(double x, double y) {
  if (x == 0.0) return 0.0;
  const double x2 = x * x;
  const double d = y - std::sin(1.0 / x);
  double g = 0.0;
  if (d != 0.0) {
    const double m = std::exp(-1.0 / x2 - 1.0 / (d * d));
    g = d > 0.0 ? m : -m;
  }
  return g + std::exp(-1.0 / (x2 * x2));
}

}  // namespace pathlab::fn
