#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathlab/curves.hpp"
#include "pathlab/functions.hpp"
#include "pathlab/interval.hpp"

namespace pathlab::catalog {

using RealMap = std::function<double(double)>;
using RealMap2 = std::function<double(double, double)>;
using Gradient = std::function<std::array<double, 2>(double, double)>;

/// A named pathological function of one variable.
struct CatalogEntry {
  std::string id;
  Interval domain = Interval::real_line();
  RealMap eval;
  std::optional<RealMap> analytic_derivative;
  /// Where analytic_derivative is valid; defaults to the whole domain.
  std::optional<Interval> derivative_domain;
  bool odd_symmetric = false;
  std::map<std::string, double> params;
  /// Scans exclude |x| below this (sin(1/x) argument reduction limit).
  double scan_cutoff = 0.0;
  /// Optional locations of local extrema of |f| (resp. |f'|) in [lo, hi].
  std::function<std::vector<double>(double, double)> value_peaks;
  std::function<std::vector<double>(double, double)> slope_peaks;
  std::string citation;

  /// Evaluate with a domain check.
  double operator()(double x) const;
  bool has_derivative_at(double x) const;
};

/// A named function of two variables.
struct BivariateEntry {
  std::string id;
  RealMap2 eval;
  std::optional<Gradient> gradient;
  /// Sign-exact evaluation for values that underflow in double.
  std::function<fn::SignedLog(double, double)> eval_signed_log;
  std::string citation;
};

/// Immutable registry of every catalog function and curve.
class Catalog {
 public:
  /// The shared standard catalog (inj-fail uses alpha = 5).
  static const Catalog& standard();

  Catalog();

  const CatalogEntry& entry(std::string_view id) const;
  const BivariateEntry& bivariate(std::string_view id) const;
  const curves::ParametricCurve& curve(std::string_view id) const;

  std::vector<std::string> entry_ids() const;
  std::vector<std::string> bivariate_ids() const;
  std::vector<std::string> curve_ids() const;

  double evaluate(std::string_view id, double x) const;
  double evaluate2(std::string_view id, double x, double y) const;

 private:
  std::map<std::string, CatalogEntry, std::less<>> entries_;
  std::map<std::string, BivariateEntry, std::less<>> bivariate_;
  std::map<std::string, curves::ParametricCurve, std::less<>> curves_;
};

// --- entry factories ------------------------------------------------------

CatalogEntry make_inj_fail(double alpha = 5.0);
CatalogEntry make_inj_fail_caption(double alpha = 5.0);
CatalogEntry make_inverse_counterexample();
CatalogEntry make_min_no_flank();
CatalogEntry make_torsion_osc();
CatalogEntry make_onesided_osc(double tol = 1e-9);
CatalogEntry make_onesided_osc_unbounded(double tol = 1e-9);
CatalogEntry make_improper_unbounded();
CatalogEntry make_decay_wild_deriv();
BivariateEntry make_parabola_trap();
BivariateEntry make_osc_curve_trap();

/// Plain entry for ad-hoc functions (tests, CLI helpers).
CatalogEntry make_entry(std::string id, Interval domain, RealMap eval,
                        std::optional<RealMap> derivative = std::nullopt,
                        bool odd_symmetric = false);

// --- the explicit branch of the inverse counterexample --------------------

/// n >= 1 with 1/(n+1) <= |x| < 1/n. Breakpoints within one ulp of 1/m are
/// snapped to 1/m. Requires 0 < |x| < 1.
double example1_branch(double x);

/// The piecewise-linear odd function on (-1, 1): on [1/(n+1), 1/n) it is
/// 1/(n+1) + (x - 1/(n+1))/2. Throws DomainError for |x| >= 1.
double example1_eval(double x);

/// True iff y lies in a half-interval [1/(n+1), (2n+1)/(2n(n+1))). These are
/// exactly the images of example1_eval on (0, 1); the rest of (0, 1) is only
/// reached through the non-constructive branch. Requires 0 < y < 1.
bool example1_gap_membership(double y);

// --- exact rationals for the Q / R\Q torsion example ----------------------

/// Reduced fraction with positive denominator; arithmetic throws on overflow.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

/// x^3 for rational x. The x^5 branch (irrationals) has no exact-input type
/// and is deliberately not represented.
Rational rational_torsion_eval(const Rational& x);

}  // namespace pathlab::catalog
