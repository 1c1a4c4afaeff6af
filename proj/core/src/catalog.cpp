#include "pathlab/catalog.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <utility>

#include "pathlab/errors.hpp"
#include "pathlab/quadrature.hpp"

namespace pathlab::catalog {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSinCutoff = 1e-6;

// Points x in [lo, hi] with x^3 = (m + offset) pi, m integer (both signs).
std::vector<double> cube_root_lattice(double lo, double hi, double offset) {
  std::vector<double> out;
  auto sweep = [&](double from, double to, double sign) {
    if (to <= from) return;
    const double c_lo = from * from * from / kPi - offset;
    const double c_hi = to * to * to / kPi - offset;
    for (double m = std::ceil(c_lo); m <= c_hi; m += 1.0) {
      out.push_back(sign * std::cbrt((m + offset) * kPi));
    }
  };
  if (hi > 0.0) sweep(std::max(lo, 0.0), hi, 1.0);
  if (lo < 0.0) sweep(std::max(-hi, 0.0), -lo, -1.0);
  return out;
}

}  // namespace

double CatalogEntry::operator()(double x) const {
  if (!domain.contains(x)) {
    throw DomainError(id + ": x = " + std::to_string(x) + " outside " + domain.to_string());
  }
  return eval(x);
}

bool CatalogEntry::has_derivative_at(double x) const {
  if (!analytic_derivative) return false;
  return derivative_domain ? derivative_domain->contains(x) : domain.contains(x);
}

CatalogEntry make_entry(std::string id, Interval domain, RealMap eval,
                        std::optional<RealMap> derivative, bool odd_symmetric) {
  CatalogEntry e;
  e.id = std::move(id);
  e.domain = domain;
  e.eval = std::move(eval);
  e.analytic_derivative = std::move(derivative);
  e.odd_symmetric = odd_symmetric;
  return e;
}

CatalogEntry make_inj_fail(double alpha) {
  auto e = make_entry(
      "inj-fail", Interval::real_line(), [alpha](double x) { return fn::inj_fail(x, alpha); },
      [alpha](double x) { return fn::inj_fail_derivative(x, alpha); });
  e.params["alpha"] = alpha;
  e.scan_cutoff = kSinCutoff;
  e.citation = "x + alpha x^2 sin(1/x^2): f'(0) = 1 but not one-to-one near 0";
  return e;
}

CatalogEntry make_inj_fail_caption(double alpha) {
  auto e = make_entry(
      "inj-fail-caption", Interval::real_line(),
      [alpha](double x) { return fn::inj_fail_caption(x, alpha); },
      [alpha](double x) { return fn::inj_fail_caption_derivative(x, alpha); });
  e.params["alpha"] = alpha;
  e.scan_cutoff = kSinCutoff;
  e.citation = "x + alpha x^2 sin(1/x): plotted variant of inj-fail";
  return e;
}

CatalogEntry make_inverse_counterexample() {
  auto e = make_entry("inverse-counterexample", Interval::open(-1.0, 1.0), example1_eval,
                      std::nullopt, true);
  e.citation =
      "piecewise-linear bijection with f'(0) = 1 whose inverse is discontinuous at 0 "
      "(branch on [-2,-1] u [1,2] not constructed)";
  return e;
}

CatalogEntry make_min_no_flank() {
  auto e = make_entry("min-no-flank", Interval::real_line(), fn::min_no_flank,
                      fn::min_no_flank_derivative);
  e.scan_cutoff = kSinCutoff;
  e.citation = "x^4 (2 + sin(1/x)): strict C^1 minimum at 0 with non-monotone flanks";
  return e;
}

CatalogEntry make_torsion_osc() {
  auto e = make_entry("torsion-osc", Interval::real_line(), fn::torsion_osc,
                      fn::torsion_osc_derivative, true);
  e.scan_cutoff = kSinCutoff;
  e.citation = "x^3 + sgn(x) x^2 sin^2(1/x): crosses its tangent at 0, not convex/concave nearby";
  return e;
}

CatalogEntry make_onesided_osc(double tol) {
  auto e = make_entry(
      "onesided-osc", Interval::closed(-1.0, 1.0),
      [tol](double x) { return quadrature::onesided_osc_F(x, tol).value; },
      fn::onesided_integrand, true);
  e.params["quad_tol"] = tol;
  e.scan_cutoff = kSinCutoff;
  e.citation = "int_0^x |cos(1/t)|^(1/|t|) dt: f'(0) = 0 <= f', f' discontinuous at 0";
  return e;
}

CatalogEntry make_onesided_osc_unbounded(double tol) {
  auto e = make_entry(
      "onesided-osc-unbounded", Interval::closed(-1.0, 1.0),
      [tol](double x) { return quadrature::onesided_osc_unbounded_F(x, tol).value; },
      fn::onesided_unbounded_integrand, true);
  e.derivative_domain = Interval(0.0, 1.0, false, true);
  e.params["quad_tol"] = tol;
  e.scan_cutoff = kSinCutoff;
  e.citation = "int_0^x |t|^(-1/2) |cos(1/t)|^(1/t^2) dt: one-sided and unbounded f'";
  return e;
}

CatalogEntry make_improper_unbounded() {
  auto e = make_entry("improper-unbounded", Interval::real_line(), fn::improper_unbounded,
                      fn::improper_unbounded_derivative);
  e.value_peaks = [](double lo, double hi) { return cube_root_lattice(lo, hi, 0.5); };
  e.slope_peaks = [](double lo, double hi) { return cube_root_lattice(lo, hi, 0.0); };
  e.citation = "x sin(x^3): convergent improper integral, unbounded integrand";
  return e;
}

CatalogEntry make_decay_wild_deriv() {
  auto e = make_entry("decay-wild-deriv", Interval::real_line(), fn::decay_wild_deriv,
                      fn::decay_wild_deriv_derivative);
  e.value_peaks = [](double lo, double hi) { return cube_root_lattice(lo, hi, 0.5); };
  e.slope_peaks = [](double lo, double hi) { return cube_root_lattice(lo, hi, 0.0); };
  e.citation = "sin(x^3)/x: tends to 0 at infinity, f' unbounded";
  return e;
}

BivariateEntry make_parabola_trap() {
  BivariateEntry e;
  e.id = "parabola-trap";
  e.eval = fn::parabola_trap;
  e.gradient = fn::parabola_trap_gradient;
  e.eval_signed_log = [](double x, double y) {
    const double v = fn::parabola_trap(x, y);
    if (v == 0.0) return fn::SignedLog{};
    return fn::SignedLog{v > 0.0 ? 1 : -1, std::log(std::fabs(v))};
  };
  e.citation = "(5y - x^2)(y - x^2): minimum along every line, none at 0";
  return e;
}

BivariateEntry make_osc_curve_trap() {
  BivariateEntry e;
  e.id = "osc-curve-trap";
  e.eval = fn::osc_curve_trap;
  e.eval_signed_log = fn::osc_curve_trap_log;
  e.citation = "g(x,y) + exp(-1/x^4): strict minimum along y = sin(1/x), none at 0";
  return e;
}

// ---------------------------------------------------------------------------

double example1_branch(double x) {
  const double ax = std::fabs(x);
  if (!(ax > 0.0 && ax < 1.0)) throw DomainError("example1_branch requires 0 < |x| < 1");
  const double r = 1.0 / ax;
  const double m = std::nearbyint(r);
  const double ulp = std::nextafter(r, std::numeric_limits<double>::infinity()) - r;
  double n = std::fabs(r - m) <= ulp ? m - 1.0 : std::floor(r);
  return std::max(n, 1.0);
}

double example1_eval(double x) {
  if (!(std::fabs(x) < 1.0)) throw DomainError("example1_eval requires |x| < 1");
  if (x == 0.0) return 0.0;
  const double ax = std::fabs(x);
  const double left = 1.0 / (example1_branch(ax) + 1.0);
  const double value = left + 0.5 * (ax - left);
  return x > 0.0 ? value : -value;
}

bool example1_gap_membership(double y) {
  if (!(y > 0.0 && y < 1.0)) throw DomainError("example1_gap_membership requires 0 < y < 1");
  const double n = example1_branch(y);
  const double left = 1.0 / (n + 1.0);
  const double mid = left + 0.5 / (n * (n + 1.0));  // (2n+1) / (2n(n+1))
  return y >= left && y < mid;
}

// ---------------------------------------------------------------------------

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) {
    if (n == std::numeric_limits<std::int64_t>::min() ||
        d == std::numeric_limits<std::int64_t>::min())
      throw NumericError("rational overflow");
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first to keep intermediates small.
  const std::int64_t g1 = std::gcd(a.num, b.den);
  const std::int64_t g2 = std::gcd(b.num, a.den);
  std::int64_t n = 0;
  std::int64_t d = 0;
  if (__builtin_mul_overflow(a.num / g1, b.num / g2, &n) ||
      __builtin_mul_overflow(a.den / g2, b.den / g1, &d))
    throw NumericError("rational overflow");
  return Rational(n, d);
}

Rational rational_torsion_eval(const Rational& x) { return x * x * x; }

// ---------------------------------------------------------------------------

namespace {

curves::ParametricCurve circle(std::string id, double b) {
  return curves::ParametricCurve(
      std::move(id), 0.0, b, {[](double t) { return std::cos(t); }, [](double t) { return std::sin(t); }},
      {[](double t) { return -std::sin(t); }, [](double t) { return std::cos(t); }});
}

}  // namespace

Catalog::Catalog() {
  for (auto e : {make_inj_fail(), make_inj_fail_caption(), make_inverse_counterexample(),
                 make_min_no_flank(), make_torsion_osc(), make_onesided_osc(),
                 make_onesided_osc_unbounded(), make_improper_unbounded(),
                 make_decay_wild_deriv()}) {
    auto id = e.id;
    entries_.emplace(std::move(id), std::move(e));
  }
  for (auto e : {make_parabola_trap(), make_osc_curve_trap()}) {
    auto id = e.id;
    bivariate_.emplace(std::move(id), std::move(e));
  }

  std::vector<curves::ParametricCurve> list;
  list.push_back(circle("quarter-circle", kPi / 2.0));
  list.emplace_back(
      "quarter-circle-sq", 0.0, std::sqrt(kPi / 2.0),
      std::vector<curves::Component>{[](double s) { return std::cos(s * s); },
                                     [](double s) { return std::sin(s * s); }},
      std::vector<curves::Component>{[](double s) { return -2.0 * s * std::sin(s * s); },
                                     [](double s) { return 2.0 * s * std::cos(s * s); }});
  list.push_back(circle("circle-2pi", 2.0 * kPi));
  list.push_back(circle("circle-3pi", 3.0 * kPi));
  list.emplace_back("segment", 0.0, 1.0,
                    std::vector<curves::Component>{[](double t) { return t; },
                                                   [](double t) { return t; }},
                    std::vector<curves::Component>{[](double) { return 1.0; },
                                                   [](double) { return 1.0; }});
  list.emplace_back(
      "gerono", 0.0, 2.0 * kPi,
      std::vector<curves::Component>{[](double t) { return std::sin(t); },
                                     [](double t) { return std::sin(t) * std::cos(t); }},
      std::vector<curves::Component>{[](double t) { return std::cos(t); },
                                     [](double t) { return std::cos(2.0 * t); }});
  list.emplace_back(
      "graph-x2sin", 1e-3, 1.0,
      std::vector<curves::Component>{[](double t) { return t; },
                                     [](double t) { return t * t * std::sin(1.0 / (t * t)); }},
      std::vector<curves::Component>{
          [](double) { return 1.0; },
          [](double t) {
            const double u = 1.0 / (t * t);
            return 2.0 * t * std::sin(u) - 2.0 / t * std::cos(u);
          }});
  for (auto& c : list) {
    auto id = c.id();
    curves_.emplace(std::move(id), std::move(c));
  }
}

const Catalog& Catalog::standard() {
  static const Catalog instance;
  return instance;
}

const CatalogEntry& Catalog::entry(std::string_view id) const {
  const auto it = entries_.find(id);
  if (it == entries_.end()) throw UnknownIdError(std::string(id));
  return it->second;
}

const BivariateEntry& Catalog::bivariate(std::string_view id) const {
  const auto it = bivariate_.find(id);
  if (it == bivariate_.end()) throw UnknownIdError(std::string(id));
  return it->second;
}

const curves::ParametricCurve& Catalog::curve(std::string_view id) const {
  const auto it = curves_.find(id);
  if (it == curves_.end()) throw UnknownIdError(std::string(id));
  return it->second;
}

namespace {
template <typename Map>
std::vector<std::string> keys(const Map& m) {
  std::vector<std::string> out;
  out.reserve(m.size());
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}
}  // namespace

std::vector<std::string> Catalog::entry_ids() const { return keys(entries_); }
std::vector<std::string> Catalog::bivariate_ids() const { return keys(bivariate_); }
std::vector<std::string> Catalog::curve_ids() const { return keys(curves_); }

double Catalog::evaluate(std::string_view id, double x) const { return entry(id)(x); }

double Catalog::evaluate2(std::string_view id, double x, double y) const {
  return bivariate(id).eval(x, y);
}

}  // namespace pathlab::catalog
