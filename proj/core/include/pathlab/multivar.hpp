#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pathlab/catalog.hpp"
#include "pathlab/functions.hpp"

namespace pathlab::multivar {

using Point2 = std::array<double, 2>;
using Matrix2 = std::array<std::array<double, 2>, 2>;

enum class HessianClass {
  PositiveDefinite,
  PositiveSemidefinite,
  Indefinite,
  NegativeSemidefinite,
  NegativeDefinite,
  Zero,
};

std::string_view to_string(HessianClass c) noexcept;

struct LineTestOptions {
  double radius = 1.0;
  std::size_t samples_per_side = 200;
  int max_halvings = 20;
};

struct LineVerdict {
  Point2 direction{};
  bool passed = false;
  double certified_radius = 0.0;  // radius of the passing sample set, 0 if none
  int halvings = 0;
  std::optional<double> failure_t;  // last sampled t with g(t) <= g(0)
};

/// g(t) = f(xi + t v) against g(0) on t in [-r, r], halving r until every
/// sample t != 0 satisfies g(t) > g(0).
LineVerdict line_restriction_test(const catalog::BivariateEntry& entry, Point2 xi, Point2 v,
                                  const LineTestOptions& options = {});

struct PointValue {
  Point2 point{};
  double value = 0.0;
};

struct HessianResult {
  Matrix2 matrix{};              // symmetrized
  std::array<double, 2> eigenvalues{};  // ascending
  HessianClass cls = HessianClass::Zero;
  double asymmetry = 0.0;        // |H12 - H21| before symmetrizing
  double zero_band = 0.0;
  double step = 0.0;
};

/// Central-difference Hessian (of the analytic gradient when present) with
/// step cbrt(eps) (1 + |xi_i|), classified by eigenvalue signs. Eigenvalues
/// with |lambda| <= 1e-5 max(1, |H|) count as zero. Throws NumericError if the
/// stencils at h and 2h disagree.
HessianResult hessian_classify(const catalog::BivariateEntry& entry, Point2 xi);

struct ExtremumVerdict {
  Point2 point{};
  std::size_t directions_tested = 0;
  std::size_t line_test_passes = 0;
  std::optional<PointValue> refutation_witness;
  std::optional<HessianResult> hessian;
  std::vector<LineVerdict> lines;

  bool every_line_passes() const noexcept {
    return directions_tested > 0 && line_test_passes == directions_tested;
  }
};

/// Line tests along `count` equally spaced directions angle 2 pi k / count.
ExtremumVerdict direction_sweep(const catalog::BivariateEntry& entry, Point2 xi,
                                std::size_t count = 360, double radius = 1.0);

struct PathWitness {
  Point2 point{};
  double value = 0.0;
  double a = 0.0;  // path t -> xi + (a t, b t^2)
  double b = 0.0;
  double t = 0.0;
};

struct PathSearchOptions {
  std::vector<double> a_grid{0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};
  std::vector<double> b_grid{-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0};
  double radius = 1e-2;   // max distance of a witness from xi
  int ladder = 12;        // t halvings below the largest admissible t
  double margin = 1e-12;  // witness needs f < f(xi) - margin
};

/// First point on a parabola xi + (a t, b t^2), in (a, b, t) grid order,
/// where f drops below f(xi).
std::optional<PathWitness> path_refutation(const catalog::BivariateEntry& entry, Point2 xi,
                                           const PathSearchOptions& options = {});

/// Sweep, parabola search and Hessian at xi together.
ExtremumVerdict extremum_verdict(const catalog::BivariateEntry& entry, Point2 xi,
                                 std::size_t count = 360, double radius = 1.0,
                                 const PathSearchOptions& paths = {});

// ---------------------------------------------------------------------------

struct SignedPoint {
  Point2 point{};
  fn::SignedLog value;
};

struct AnnulusSearch {
  double r_lo = 0.0;
  double r_hi = 0.0;
  std::optional<SignedPoint> positive;  // above the curve
  std::optional<SignedPoint> negative;  // below the curve
  bool complete() const noexcept { return positive && negative; }
};

struct CurveRestrictionOptions {
  std::size_t on_curve_samples = 1000;
  double min_abs_x = 1e-3;
  int annuli = 8;
  std::size_t grid_candidates = 200;
};

struct CurveRestrictionVerdict {
  std::size_t on_curve_samples = 0;
  std::size_t on_curve_positive = 0;
  std::optional<SignedPoint> on_curve_failure;  // first sample with f <= 0
  std::vector<AnnulusSearch> annuli;

  bool on_curve_ok() const noexcept { return on_curve_positive == on_curve_samples; }
  bool annuli_ok() const noexcept;
  bool holds() const noexcept { return on_curve_ok() && annuli_ok(); }
};

/// f(x, sin(1/x)) > 0 on log-spaced |x| in [min_abs_x, 1], then for each
/// annulus 2^-(k+1) <= |(x, y)| <= 2^-k a point above the curve with f > 0
/// and one below it with f < 0. Signs come from the sign-exact evaluator.
CurveRestrictionVerdict curve_restriction_check(const catalog::BivariateEntry& entry,
                                                const CurveRestrictionOptions& options = {});

}  // namespace pathlab::multivar
