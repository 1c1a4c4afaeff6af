#include "pathlab/numdiff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pathlab/errors.hpp"
#include "pathlab/roots.hpp"

namespace pathlab::numdiff {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double default_step(double x, const StepPolicy& policy) {
  return policy.scale * std::max(policy.min_step, std::sqrt(kEps) * (1.0 + std::fabs(x)));
}

// Round h so that x + h and x - h are exactly representable offsets.
double representable_step(double x, double h) {
  volatile double probe = x + h;
  const double exact = probe - x;
  return exact > 0.0 ? exact : h;
}

Scheme resolve(const Interval& domain, double x, double h, Scheme requested) {
  const bool fwd = domain.contains(x + h);
  const bool bwd = domain.contains(x - h);
  switch (requested) {
    case Scheme::Central:
      if (fwd && bwd) return Scheme::Central;
      break;
    case Scheme::Forward:
      if (fwd) return Scheme::Forward;
      break;
    case Scheme::Backward:
      if (bwd) return Scheme::Backward;
      break;
    case Scheme::Automatic:
      if (fwd && bwd) return Scheme::Central;
      if (fwd) return Scheme::Forward;
      if (bwd) return Scheme::Backward;
      break;
  }
  throw BoundaryError("difference stencil at x = " + std::to_string(x) + " leaves domain " +
                      domain.to_string());
}

}  // namespace

DerivativeEstimate derivative(const catalog::CatalogEntry& entry, double x, Scheme scheme,
                              StepPolicy policy) {
  const double fx = entry(x);
  const double h = representable_step(x, default_step(x, policy));
  const Scheme s = resolve(entry.domain, x, h, scheme);

  auto diff = [&](double step) {
    switch (s) {
      case Scheme::Forward: return (entry.eval(x + step) - fx) / step;
      case Scheme::Backward: return (fx - entry.eval(x - step)) / step;
      default: return (entry.eval(x + step) - entry.eval(x - step)) / (2.0 * step);
    }
  };
  const double d0 = diff(h);
  const double d1 = diff(h / 2.0);
  const double d2 = diff(h / 4.0);

  DerivativeEstimate out;
  out.point = x;
  out.step = h;
  out.order = 1;
  if (s == Scheme::Central) {
    // error ~ h^2, then h^4
    const double r1a = (4.0 * d1 - d0) / 3.0;
    const double r1b = (4.0 * d2 - d1) / 3.0;
    out.value = (16.0 * r1b - r1a) / 15.0;
    out.error_indicator = std::fabs(out.value - r1b);
  } else {
    // error ~ h, then h^2
    const double r1a = 2.0 * d1 - d0;
    const double r1b = 2.0 * d2 - d1;
    out.value = (4.0 * r1b - r1a) / 3.0;
    out.error_indicator = std::fabs(out.value - r1b);
  }
  return out;
}

DerivativeEstimate second_derivative(const catalog::CatalogEntry& entry, double x,
                                     StepPolicy policy) {
  const double fx = entry(x);
  const double base = policy.scale * std::max(1e-4, std::pow(kEps, 0.25) * (1.0 + std::fabs(x)));
  const double h = representable_step(x, base);
  if (!entry.domain.contains(x + h) || !entry.domain.contains(x - h))
    throw BoundaryError("second-difference stencil leaves domain at x = " + std::to_string(x));
  auto diff = [&](double step) {
    return (entry.eval(x + step) - 2.0 * fx + entry.eval(x - step)) / (step * step);
  };
  const double d0 = diff(h);
  const double d1 = diff(h / 2.0);
  const double d2 = diff(h / 4.0);
  const double r1a = (4.0 * d1 - d0) / 3.0;
  const double r1b = (4.0 * d2 - d1) / 3.0;
  DerivativeEstimate out;
  out.point = x;
  out.step = h;
  out.order = 2;
  out.value = (16.0 * r1b - r1a) / 15.0;
  out.error_indicator = std::fabs(out.value - r1b);
  return out;
}

double slope(const catalog::CatalogEntry& entry, double x, StepPolicy policy) {
  if (entry.has_derivative_at(x)) return (*entry.analytic_derivative)(x);
  return derivative(entry, x, Scheme::Automatic, policy).value;
}

std::vector<double> difference_quotients(const catalog::CatalogEntry& entry, double x0,
                                         const std::vector<double>& points) {
  const double f0 = entry(x0);
  std::vector<double> out;
  out.reserve(points.size());
  for (const double x : points) out.push_back((entry(x) - f0) / (x - x0));
  return out;
}

QuotientBounds difference_quotient_bounds(long n, double tau) {
  if (n < 1) throw PreconditionError("difference_quotient_bounds requires n >= 1");
  const double nd = static_cast<double>(n);
  if (!(tau >= 0.0 && tau < 1.0 / (nd * (nd + 1.0))))
    throw PreconditionError("difference_quotient_bounds requires 0 <= tau < 1/(n(n+1))");
  const double s = tau * (nd + 1.0);
  return {(1.0 + 0.5 * s) / (1.0 + s), 1.0 / (1.0 + 1.0 / nd), 1.0};
}

ScanReport sign_change_scan(const catalog::CatalogEntry& entry, const Interval& interval,
                            std::size_t grid, const ScanOptions& options) {
  if (!entry.domain.contains(interval))
    throw PreconditionError("scan interval " + interval.to_string() + " not inside domain of " +
                            entry.id);
  if (entry.scan_cutoff > 0.0) {
    const double cut = std::max(entry.scan_cutoff, options.min_abs_x);
    if (interval.lo() < cut && interval.hi() > -cut)
      throw PreconditionError("scan interval reaches |x| < " + std::to_string(cut) +
                              " where sin(1/x) sampling is not meaningful");
  }

  ScanReport report;
  report.interval = interval;
  report.threshold = options.threshold;
  const double lo = interval.lo();
  const double step = interval.width() / static_cast<double>(grid + 1);
  for (std::size_t i = 0; i < grid; ++i) {
    const double x = lo + static_cast<double>(i + 1) * step;
    const double d = slope(entry, x, options.step);
    report.sup_abs_seen = std::max(report.sup_abs_seen, std::fabs(d));
    if (!report.positive_witness && d > options.threshold) report.positive_witness = Witness{x, d};
    if (!report.negative_witness && d < -options.threshold)
      report.negative_witness = Witness{x, d};
  }
  report.samples = grid;
  return report;
}

InverseDerivativeCheck inverse_derivative_check(const catalog::CatalogEntry& entry,
                                                const Interval& interval, double x0,
                                                std::size_t monotone_grid) {
  if (!entry.domain.contains(interval))
    throw PreconditionError("interval not inside domain of " + entry.id);
  if (!interval.contains(x0)) throw PreconditionError("x0 outside the interval");

  const double inf = std::numeric_limits<double>::infinity();
  const double lo = interval.lo_closed() ? interval.lo() : std::nextafter(interval.lo(), inf);
  const double hi = interval.hi_closed() ? interval.hi() : std::nextafter(interval.hi(), -inf);
  const std::size_t n = std::max<std::size_t>(monotone_grid, 2);

  // Strict monotonicity on the sampled grid.
  const double f_lo = entry(lo);
  double prev = f_lo;
  int direction = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = i == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    const double fx = entry(x);
    const int d = fx > prev ? 1 : (fx < prev ? -1 : 0);
    if (d == 0 || (direction != 0 && d != direction))
      throw PreconditionError(entry.id + " is not strictly monotone on " + interval.to_string());
    direction = d;
    prev = fx;
  }
  const double f_hi = prev;

  double fprime = 0.0;
  double fprime_err = 0.0;
  if (entry.has_derivative_at(x0)) {
    fprime = (*entry.analytic_derivative)(x0);
  } else {
    const auto est = derivative(entry, x0);
    fprime = est.value;
    fprime_err = est.error_indicator;
  }
  if (std::fabs(fprime) <= 10.0 * fprime_err + 1e-12)
    throw PreconditionError("f'(x0) = 0: the inverse-derivative formula does not apply");

  const double y0 = entry(x0);
  auto inverse = [&](double y) {
    const auto root = roots::bracketed_root([&](double x) { return entry.eval(x) - y; }, lo, hi);
    if (!root) throw NumericError("inversion of " + entry.id + " failed at y = " + std::to_string(y));
    return root->root;
  };
  const double y_lo = std::min(f_lo, f_hi);
  const double y_hi = std::max(f_lo, f_hi);
  const auto inv_entry =
      catalog::make_entry(entry.id + "^-1", Interval::closed(y_lo, y_hi), inverse);
  const auto est = derivative(inv_entry, y0);

  InverseDerivativeCheck out;
  out.x0 = x0;
  out.y0 = y0;
  out.direct = est.value;
  out.via_formula = 1.0 / fprime;
  out.error_indicator = est.error_indicator;
  return out;
}

TangentVerdict tangent_side_test(const catalog::CatalogEntry& entry, double x0,
                                 const Interval& interval, std::size_t grid) {
  if (!interval.contains(x0)) throw PreconditionError("x0 outside the interval");
  double k = 0.0;
  if (entry.has_derivative_at(x0)) {
    k = (*entry.analytic_derivative)(x0);
  } else {
    const auto est = derivative(entry, x0);
    if (!(est.error_indicator <= 1e-6 * (1.0 + std::fabs(est.value))))
      throw PreconditionError(entry.id + " is not (numerically) differentiable at x0");
    k = est.value;
  }
  const double f0 = entry(x0);

  TangentVerdict v;
  v.slope = k;
  const std::size_t n = std::max<std::size_t>(grid, 2);
  auto side = [&](double reach, double sign, std::optional<Witness>& above,
                  std::optional<Witness>& below) {
    if (!(reach > 0.0)) return;
    const double nearest = std::max(entry.scan_cutoff, reach * 1e-9);
    const double ratio = nearest / reach;
    for (std::size_t i = 0; i < n; ++i) {
      // geometric offsets from `reach` down to `nearest`
      const double offset = reach * std::pow(ratio, static_cast<double>(i) / static_cast<double>(n - 1));
      const double x = x0 + sign * offset;
      if (!interval.contains(x) || !entry.domain.contains(x)) continue;
      const double gap = entry.eval(x) - (f0 + k * (x - x0));
      if (gap > 0.0 && !above) above = Witness{x, gap};
      if (gap < 0.0 && !below) below = Witness{x, gap};
      ++v.samples;
    }
  };
  side(interval.hi() - x0, 1.0, v.right_above, v.right_below);
  side(x0 - interval.lo(), -1.0, v.left_above, v.left_below);

  const bool right_up = v.right_above && !v.right_below;
  const bool right_down = v.right_below && !v.right_above;
  const bool left_up = v.left_above && !v.left_below;
  const bool left_down = v.left_below && !v.left_above;
  v.torsion_point = (right_up && left_down) || (right_down && left_up);
  return v;
}

ConvexityVerdict convexity_scan(const catalog::CatalogEntry& entry, const Interval& interval,
                                std::size_t grid) {
  if (grid < 4) throw PreconditionError("convexity_scan requires grid >= 4");
  if (!entry.domain.contains(interval))
    throw PreconditionError("scan interval not inside domain of " + entry.id);
  const double step = interval.width() / static_cast<double>(grid + 1);
  auto at = [&](std::size_t i) { return interval.lo() + static_cast<double>(i + 1) * step; };

  ConvexityVerdict v;
  double f_prev = entry.eval(at(0));
  double f_mid = entry.eval(at(1));
  for (std::size_t i = 1; i + 1 < grid; ++i) {
    const double f_next = entry.eval(at(i + 1));
    const double d2 = f_prev - 2.0 * f_mid + f_next;
    const double noise = 64.0 * kEps * (std::fabs(f_prev) + 2.0 * std::fabs(f_mid) + std::fabs(f_next));
    if (d2 > noise && !v.positive) v.positive = Witness{at(i), d2 / (step * step)};
    if (d2 < -noise && !v.negative) v.negative = Witness{at(i), d2 / (step * step)};
    ++v.samples;
    f_prev = f_mid;
    f_mid = f_next;
  }
  return v;
}

}  // namespace pathlab::numdiff
