#include "pathlab/multivar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pathlab/errors.hpp"

namespace pathlab::multivar {

std::string_view to_string(HessianClass c) noexcept {
  switch (c) {
    case HessianClass::PositiveDefinite: return "positive-definite";
    case HessianClass::PositiveSemidefinite: return "positive-semidefinite";
    case HessianClass::Indefinite: return "indefinite";
    case HessianClass::NegativeSemidefinite: return "negative-semidefinite";
    case HessianClass::NegativeDefinite: return "negative-definite";
    case HessianClass::Zero: return "zero";
  }
  return "zero";
}

LineVerdict line_restriction_test(const catalog::BivariateEntry& entry, Point2 xi, Point2 v,
                                  const LineTestOptions& options) {
  const double norm = std::hypot(v[0], v[1]);
  if (!(norm > 0.0)) throw PreconditionError("line_restriction_test needs a nonzero direction");
  v = {v[0] / norm, v[1] / norm};
  LineVerdict out;
  out.direction = v;
  const double g0 = entry.eval(xi[0], xi[1]);
  const std::size_t n = std::max<std::size_t>(options.samples_per_side, 1);
  double r = options.radius;
  for (int h = 0; h <= options.max_halvings; ++h, r *= 0.5) {
    bool ok = true;
    for (std::size_t k = 1; k <= n && ok; ++k) {
      const double t = r * static_cast<double>(k) / static_cast<double>(n);
      for (const double st : {t, -t}) {
        if (!(entry.eval(xi[0] + st * v[0], xi[1] + st * v[1]) > g0)) {
          ok = false;
          out.failure_t = st;
          break;
        }
      }
    }
    if (ok) {
      out.passed = true;
      out.certified_radius = r;
      out.halvings = h;
      return out;
    }
    out.halvings = h;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Matrix2 stencil(const catalog::BivariateEntry& entry, Point2 xi, Point2 h) {
  Matrix2 H{};
  if (entry.gradient) {
    const auto& grad = *entry.gradient;
    for (int i = 0; i < 2; ++i) {
      Point2 plus = xi;
      Point2 minus = xi;
      plus[i] += h[i];
      minus[i] -= h[i];
      const auto gp = grad(plus[0], plus[1]);
      const auto gm = grad(minus[0], minus[1]);
      const double width = plus[i] - minus[i];
      for (int j = 0; j < 2; ++j) H[i][j] = (gp[j] - gm[j]) / width;
    }
    return H;
  }
  const auto& f = entry.eval;
  const double f0 = f(xi[0], xi[1]);
  const double hx = h[0];
  const double hy = h[1];
  H[0][0] = (f(xi[0] + hx, xi[1]) - 2.0 * f0 + f(xi[0] - hx, xi[1])) / (hx * hx);
  H[1][1] = (f(xi[0], xi[1] + hy) - 2.0 * f0 + f(xi[0], xi[1] - hy)) / (hy * hy);
  H[0][1] = (f(xi[0] + hx, xi[1] + hy) - f(xi[0] + hx, xi[1] - hy) - f(xi[0] - hx, xi[1] + hy) +
             f(xi[0] - hx, xi[1] - hy)) /
            (4.0 * hx * hy);
  H[1][0] = H[0][1];
  return H;
}

double max_abs_entry(const Matrix2& m) {
  return std::max({std::fabs(m[0][0]), std::fabs(m[0][1]), std::fabs(m[1][0]), std::fabs(m[1][1])});
}

}  // namespace

HessianResult hessian_classify(const catalog::BivariateEntry& entry, Point2 xi) {
  const double base = std::cbrt(std::numeric_limits<double>::epsilon());
  const Point2 h{base * (1.0 + std::fabs(xi[0])), base * (1.0 + std::fabs(xi[1]))};
  const Matrix2 fine = stencil(entry, xi, h);
  const Matrix2 coarse = stencil(entry, xi, {2.0 * h[0], 2.0 * h[1]});

  double drift = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) drift = std::max(drift, std::fabs(fine[i][j] - coarse[i][j]));
  const double scale = std::max(1.0, max_abs_entry(fine));
  if (!std::isfinite(drift) || drift > 1e-3 * scale)
    throw NumericError("Hessian stencils at h and 2h disagree by " + std::to_string(drift));

  HessianResult out;
  out.step = h[0];
  out.asymmetry = std::fabs(fine[0][1] - fine[1][0]);
  const double off = 0.5 * (fine[0][1] + fine[1][0]);
  out.matrix = {{{fine[0][0], off}, {off, fine[1][1]}}};

  const double mean = 0.5 * (fine[0][0] + fine[1][1]);
  const double radius = std::hypot(0.5 * (fine[0][0] - fine[1][1]), off);
  out.eigenvalues = {mean - radius, mean + radius};
  const double spectral = std::max(std::fabs(out.eigenvalues[0]), std::fabs(out.eigenvalues[1]));
  out.zero_band = 1e-5 * std::max(1.0, spectral);

  auto sign = [&](double lambda) { return std::fabs(lambda) <= out.zero_band ? 0 : (lambda > 0 ? 1 : -1); };
  const int lo = sign(out.eigenvalues[0]);
  const int hi = sign(out.eigenvalues[1]);
  if (lo > 0) {
    out.cls = HessianClass::PositiveDefinite;
  } else if (hi < 0) {
    out.cls = HessianClass::NegativeDefinite;
  } else if (lo < 0 && hi > 0) {
    out.cls = HessianClass::Indefinite;
  } else if (lo == 0 && hi > 0) {
    out.cls = HessianClass::PositiveSemidefinite;
  } else if (lo < 0 && hi == 0) {
    out.cls = HessianClass::NegativeSemidefinite;
  } else {
    out.cls = HessianClass::Zero;
  }
  return out;
}

ExtremumVerdict direction_sweep(const catalog::BivariateEntry& entry, Point2 xi, std::size_t count,
                                double radius) {
  if (count < 4) throw PreconditionError("direction_sweep needs count >= 4");
  ExtremumVerdict out;
  out.point = xi;
  out.lines.reserve(count);
  LineTestOptions options;
  options.radius = radius;
  for (std::size_t k = 0; k < count; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
    auto line = line_restriction_test(entry, xi, {std::cos(angle), std::sin(angle)}, options);
    if (line.passed) ++out.line_test_passes;
    out.lines.push_back(line);
  }
  out.directions_tested = count;
  return out;
}

std::optional<PathWitness> path_refutation(const catalog::BivariateEntry& entry, Point2 xi,
                                           const PathSearchOptions& options) {
  if (options.a_grid.empty() || options.b_grid.empty())
    throw PreconditionError("path_refutation needs a nonempty grid");
  const double f0 = entry.eval(xi[0], xi[1]);
  for (const double a : options.a_grid) {
    for (const double b : options.b_grid) {
      // Largest t with |(a t, b t^2)| <= radius, by bisection on the monotone norm.
      double lo = 0.0;
      double hi = options.radius / std::max(std::fabs(a), 1e-300);
      if (a == 0.0) hi = std::sqrt(options.radius / std::max(std::fabs(b), 1e-300));
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (std::hypot(a * mid, b * mid * mid) <= options.radius ? lo : hi) = mid;
      }
      double t = lo;
      for (int j = 0; j <= options.ladder; ++j, t *= 0.5) {
        const Point2 p{xi[0] + a * t, xi[1] + b * t * t};
        const double v = entry.eval(p[0], p[1]);
        if (v < f0 - options.margin) return PathWitness{p, v, a, b, t};
      }
    }
  }
  return std::nullopt;
}

ExtremumVerdict extremum_verdict(const catalog::BivariateEntry& entry, Point2 xi, std::size_t count,
                                 double radius, const PathSearchOptions& paths) {
  auto out = direction_sweep(entry, xi, count, radius);
  if (const auto w = path_refutation(entry, xi, paths)) out.refutation_witness = PointValue{w->point, w->value};
  out.hessian = hessian_classify(entry, xi);
  return out;
}

// ---------------------------------------------------------------------------

bool CurveRestrictionVerdict::annuli_ok() const noexcept {
  return !annuli.empty() &&
         std::all_of(annuli.begin(), annuli.end(), [](const AnnulusSearch& a) { return a.complete(); });
}

namespace {

fn::SignedLog signed_eval(const catalog::BivariateEntry& entry, double x, double y) {
  if (entry.eval_signed_log) return entry.eval_signed_log(x, y);
  const double v = entry.eval(x, y);
  if (v == 0.0) return {};
  return {v > 0.0 ? 1 : -1, std::log(std::fabs(v))};
}

std::vector<double> annulus_candidates(double r_hi, double min_abs_x, std::size_t grid) {
  std::vector<double> xs;
  // Zeros of sin(1/x) keep the curve close to the x axis.
  const double m_first = std::ceil(1.0 / (std::numbers::pi * r_hi));
  for (double m = std::max(1.0, m_first); xs.size() < 64; m += 1.0) {
    const double x = 1.0 / (m * std::numbers::pi);
    if (x < min_abs_x) break;
    xs.push_back(x);
  }
  const double lo = std::max(min_abs_x, r_hi * 1e-3);
  for (std::size_t i = 0; i < grid && lo < r_hi; ++i) {
    const double frac = grid > 1 ? static_cast<double>(i) / static_cast<double>(grid - 1) : 0.0;
    xs.push_back(lo * std::pow(r_hi / lo, frac));
  }
  const std::size_t positive = xs.size();
  for (std::size_t i = 0; i < positive; ++i) xs.push_back(-xs[i]);
  return xs;
}

}  // namespace

CurveRestrictionVerdict curve_restriction_check(const catalog::BivariateEntry& entry,
                                                const CurveRestrictionOptions& options) {
  CurveRestrictionVerdict out;
  const std::size_t half = std::max<std::size_t>(options.on_curve_samples / 2, 1);
  const double log_lo = std::log(options.min_abs_x);
  for (std::size_t i = 0; i < half; ++i) {
    const double frac = half > 1 ? static_cast<double>(i) / static_cast<double>(half - 1) : 0.0;
    const double ax = std::exp(log_lo * (1.0 - frac));
    for (const double x : {ax, -ax}) {
      const double y = std::sin(1.0 / x);
      const auto v = signed_eval(entry, x, y);
      ++out.on_curve_samples;
      if (v.sign > 0) {
        ++out.on_curve_positive;
      } else if (!out.on_curve_failure) {
        out.on_curve_failure = SignedPoint{{x, y}, v};
      }
    }
  }

  for (int k = 0; k < options.annuli; ++k) {
    AnnulusSearch search;
    search.r_hi = std::ldexp(1.0, -k);
    search.r_lo = 0.5 * search.r_hi;
    for (const double x : annulus_candidates(search.r_hi, options.min_abs_x, options.grid_candidates)) {
      if (search.complete()) break;
      const double s = std::sin(1.0 / x);
      for (int j = 0; j <= 60 && !search.complete(); ++j) {
        for (const double d : {std::ldexp(1.0, -j), 0.75 * std::ldexp(1.0, -j)}) {
          if (!search.positive) {
            const double y = s + d;
            const double r = std::hypot(x, y);
            if (r >= search.r_lo && r <= search.r_hi) {
              const auto v = signed_eval(entry, x, y);
              if (v.sign > 0) search.positive = SignedPoint{{x, y}, v};
            }
          }
          if (!search.negative) {
            const double y = s - d;
            const double r = std::hypot(x, y);
            if (r >= search.r_lo && r <= search.r_hi) {
              const auto v = signed_eval(entry, x, y);
              if (v.sign < 0) search.negative = SignedPoint{{x, y}, v};
            }
          }
        }
      }
    }
    out.annuli.push_back(search);
  }
  return out;
}

}  // namespace pathlab::multivar
