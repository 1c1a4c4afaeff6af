#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pathlab/catalog.hpp"
#include "pathlab/interval.hpp"

namespace pathlab::numdiff {

enum class Scheme {
  Automatic,  // central, one-sided within reach of a domain endpoint
  Central,
  Forward,
  Backward,
};

struct StepPolicy {
  double scale = 1.0;      // multiplies the default step
  double min_step = 1e-6;  // h = scale * max(min_step, sqrt(eps) (1 + |x|))
};

struct DerivativeEstimate {
  double point = 0.0;
  double value = 0.0;
  double step = 0.0;
  int order = 1;
  double error_indicator = 0.0;  // spread of the Richardson table
};

/// First derivative by differences over {h, h/2, h/4} with Richardson
/// extrapolation. Throws BoundaryError if no stencil fits in the domain.
DerivativeEstimate derivative(const catalog::CatalogEntry& entry, double x,
                              Scheme scheme = Scheme::Automatic, StepPolicy policy = {});

/// Second derivative, central second differences with the same extrapolation.
DerivativeEstimate second_derivative(const catalog::CatalogEntry& entry, double x,
                                     StepPolicy policy = {});

/// f'(x) from the analytic derivative where valid, else finite differences.
double slope(const catalog::CatalogEntry& entry, double x, StepPolicy policy = {});

/// (f(x_k) - f(x0)) / (x_k - x0) along a sequence x_k -> x0.
std::vector<double> difference_quotients(const catalog::CatalogEntry& entry, double x0,
                                         const std::vector<double>& points);

struct QuotientBounds {
  double q = 0.0;
  double lower = 0.0;
  double upper = 1.0;
};

/// Quotient f(x)/x of the inverse counterexample at x = 1/(n+1) + tau,
/// q = (1 + tau (n+1)/2) / (1 + tau (n+1)), with its bounds n/(n+1) <= q <= 1.
/// Requires n >= 1 and 0 <= tau < 1/(n(n+1)).
QuotientBounds difference_quotient_bounds(long n, double tau);

struct Witness {
  double x = 0.0;
  double value = 0.0;
};

struct ScanReport {
  Interval interval = Interval::real_line();
  std::optional<Witness> positive_witness;  // first f' > threshold
  std::optional<Witness> negative_witness;  // first f' < -threshold
  double sup_abs_seen = 0.0;
  std::size_t samples = 0;
  double threshold = 0.0;

  bool both_signs() const noexcept { return positive_witness && negative_witness; }
  /// Sampled sup |f'| exceeds M. Evidence only; unboundedness is not decidable by sampling.
  bool exceeds(double M) const noexcept { return sup_abs_seen > M; }
};

struct ScanOptions {
  double threshold = 0.0;
  double min_abs_x = 1e-6;  // applies to entries with a scan cutoff
  StepPolicy step = {};
};

/// Evaluates f' at `grid` interior points of `interval` (equally spaced,
/// endpoints excluded) and records the first witness of each sign in grid
/// order. Throws PreconditionError if the interval reaches below the cutoff.
ScanReport sign_change_scan(const catalog::CatalogEntry& entry, const Interval& interval,
                            std::size_t grid, const ScanOptions& options = {});

struct InverseDerivativeCheck {
  double x0 = 0.0;
  double y0 = 0.0;
  double direct = 0.0;       // finite difference of the numerical inverse at y0
  double via_formula = 0.0;  // 1 / f'(x0)
  double error_indicator = 0.0;
};

/// Numerical (f^{-1})'(f(x0)) against 1/f'(x0). Throws PreconditionError when
/// f is not strictly monotone on the sampled interval or f'(x0) = 0, and
/// NumericError when the inversion fails.
InverseDerivativeCheck inverse_derivative_check(const catalog::CatalogEntry& entry,
                                                const Interval& interval, double x0,
                                                std::size_t monotone_grid = 2000);

struct TangentVerdict {
  bool torsion_point = false;
  double slope = 0.0;
  // first sample strictly above / below the tangent on each side
  std::optional<Witness> left_above, left_below, right_above, right_below;
  std::size_t samples = 0;
};

/// Graph above the tangent on one side of x0 and below it on the other.
TangentVerdict tangent_side_test(const catalog::CatalogEntry& entry, double x0,
                                 const Interval& interval, std::size_t grid = 20000);

struct ConvexityVerdict {
  std::optional<Witness> positive;  // first strictly positive second difference
  std::optional<Witness> negative;
  std::size_t samples = 0;

  bool neither_convex_nor_concave() const noexcept { return positive && negative; }
};

/// Second differences f(x-h) - 2 f(x) + f(x+h) on an equally spaced grid.
/// Differences within rounding noise of zero count as zero.
ConvexityVerdict convexity_scan(const catalog::CatalogEntry& entry, const Interval& interval,
                                std::size_t grid);

}  // namespace pathlab::numdiff
