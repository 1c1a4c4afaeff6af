#include "pathlab/cases.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <numbers>

#include "pathlab/catalog.hpp"
#include "pathlab/curves.hpp"
#include "pathlab/errors.hpp"
#include "pathlab/multivar.hpp"
#include "pathlab/numdiff.hpp"
#include "pathlab/quadrature.hpp"

namespace pathlab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Claims = std::vector<Claim>;
using CaseFn = std::function<Claims(const Config&)>;

Claim claim(std::string text, bool ok) { return Claim{std::move(text), ok ? Status::Pass : Status::Fail, {}}; }

Claim claim(std::string text, bool ok, bool converged) {
  Claim c = claim(std::move(text), ok);
  if (!converged) c.status = Status::Inconclusive;
  return c;
}

std::int64_t as_int(std::size_t n) { return static_cast<std::int64_t>(n); }

std::int64_t ulp_distance(double a, double b) {
  auto key = [](double v) {
    std::int64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    return bits < 0 ? std::numeric_limits<std::int64_t>::min() - bits : bits;
  };
  const std::int64_t d = key(a) - key(b);
  return d < 0 ? -d : d;
}

// -3 t^4 rounded once: t^2 and t^4 carried as double-doubles.
double minus_three_t4(double t) {
  const double t2 = t * t;
  const double t2_lo = std::fma(t, t, -t2);
  const double q = t2 * t2;
  const double q_lo = std::fma(t2, t2, -q) + 2.0 * t2 * t2_lo;
  const double r = -3.0 * q;
  return r + (std::fma(-3.0, q, -r) - 3.0 * q_lo);
}

const catalog::Catalog& cat() { return catalog::Catalog::standard(); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string span_text(const Interval& iv) { return "(" + num(iv.lo()) + ", " + num(iv.hi()) + ")"; }

// ---------------------------------------------------------------------------

Claims inverse_counterexample(const Config& config) {
  Claims out;
  const auto& f = cat().entry("inverse-counterexample");

  bool inside = true;
  double min_q = kInf;
  long min_q_n = 0;
  std::size_t checked = 0;
  const long n_max = static_cast<long>(config.quotient_n);
  for (long n = 1; n <= n_max; ++n) {
    const double nd = static_cast<double>(n);
    const double left = 1.0 / (nd + 1.0);
    const double width = 1.0 / (nd * (nd + 1.0));
    const double lower = nd / (nd + 1.0);
    for (const double frac : {0.0, 0.25, 0.5, 0.75, 0.999}) {
      const double x = left + frac * width;
      const double q = catalog::example1_eval(x) / x;
      ++checked;
      if (!(lower <= q && q <= 1.0)) inside = false;
      if (q < min_q) {
        min_q = q;
        min_q_n = n;
      }
    }
  }
  const double q_last = catalog::example1_eval(1.0 / (static_cast<double>(n_max) + 1.0)) *
                        (static_cast<double>(n_max) + 1.0);
  out.push_back(claim("difference quotients f(x)/x at x = 1/(n+1) + tau lie in [n/(n+1), 1]", inside)
                    .witness("n_max", static_cast<std::int64_t>(n_max))
                    .witness("quotients_checked", as_int(checked))
                    .witness("min_quotient", min_q)
                    .witness("min_quotient_n", static_cast<std::int64_t>(min_q_n))
                    .witness("quotient_at_n_max", q_last));

  const auto d0 = numdiff::derivative(f, 0.0);
  out.push_back(claim("Richardson estimate of f'(0) is 1 within 1e-3", std::fabs(d0.value - 1.0) <= 1e-3)
                    .witness("estimate", d0.value)
                    .witness("step", d0.step)
                    .witness("error_indicator", d0.error_indicator));

  bool image_ok = true;
  double first_miss = 0.0;
  constexpr std::size_t kImageSamples = 10000;
  for (std::size_t i = 1; i <= kImageSamples; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(kImageSamples + 1);
    if (!catalog::example1_gap_membership(catalog::example1_eval(x))) {
      if (image_ok) first_miss = x;
      image_ok = false;
    }
  }
  out.push_back(claim("values on (0,1) fall in the half-intervals [1/(n+1), (2n+1)/(2n(n+1)))", image_ok)
                    .witness("samples", as_int(kImageSamples))
                    .witness("first_miss", first_miss));
  return out;
}

Claims inverse_derivative_formula(const Config&) {
  Claims out;
  const auto cubic = catalog::make_entry(
      "cubic-plus-linear", Interval::closed(-2.0, 2.0), [](double x) { return x * x * x + x; },
      [](double x) { return 3.0 * x * x + 1.0; });
  const auto c = numdiff::inverse_derivative_check(cubic, cubic.domain, 1.0);
  out.push_back(claim("x^3 + x at x0 = 1: inverse derivative matches 1/f'(1) = 0.25 within 1e-6",
                      std::fabs(c.direct - 0.25) <= 1e-6 && c.via_formula == 0.25)
                    .witness("direct", c.direct)
                    .witness("via_formula", c.via_formula)
                    .witness("error_indicator", c.error_indicator));

  const auto& g = cat().entry("improper-unbounded");
  const auto d = numdiff::inverse_derivative_check(g, Interval::closed(0.0, 1.0), 0.8);
  const double gap = std::fabs(d.direct - d.via_formula);
  out.push_back(claim("x sin(x^3) on [0, 1] at x0 = 0.8: inverse derivative matches 1/f'(x0)",
                      gap <= 1e-5 * (1.0 + std::fabs(d.via_formula)))
                    .witness("direct", d.direct)
                    .witness("via_formula", d.via_formula));

  const auto pure_cubic = catalog::make_entry(
      "cube", Interval::closed(-1.0, 1.0), [](double x) { return x * x * x; },
      [](double x) { return 3.0 * x * x; });
  bool refused = false;
  try {
    numdiff::inverse_derivative_check(pure_cubic, pure_cubic.domain, 0.0);
  } catch (const PreconditionError&) {
    refused = true;
  }
  out.push_back(claim("x^3 at x0 = 0 is refused: the formula needs f'(x0) != 0", refused));
  return out;
}

Claims inj_fail(const Config& config) {
  Claims out;
  const auto& f = cat().entry("inj-fail");
  numdiff::ScanOptions options;
  options.threshold = 100.0;
  options.min_abs_x = config.min_abs_x;
  options.step.scale = config.fd_step_scale;
  const auto scan = numdiff::sign_change_scan(f, Interval::open(1e-4, 1e-2), config.scan_grid, options);
  Claim both = claim("f' exceeds +100 and -100 on (1e-4, 1e-2) (sampled; unboundedness itself is not decidable)",
                     scan.both_signs());
  if (scan.positive_witness)
    both.witness("positive_x", scan.positive_witness->x).witness("positive_slope", scan.positive_witness->value);
  if (scan.negative_witness)
    both.witness("negative_x", scan.negative_witness->x).witness("negative_slope", scan.negative_witness->value);
  both.witness("sup_abs_seen", scan.sup_abs_seen).witness("samples", as_int(scan.samples));
  out.push_back(std::move(both));

  const auto d0 = numdiff::derivative(f, 0.0);
  out.push_back(claim("f'(0) = 1", std::fabs(d0.value - 1.0) <= 1e-6).witness("estimate", d0.value));

  for (const double delta : {1e-2, 1e-3, 1e-4}) {
    constexpr std::size_t kGrid = 100000;
    const double lo = delta / 10.0;
    std::optional<std::pair<double, double>> drop;
    double prev_x = lo;
    double prev_f = f(lo);
    for (std::size_t i = 1; i < kGrid && !drop; ++i) {
      const double x = lo + (delta - lo) * static_cast<double>(i) / static_cast<double>(kGrid - 1);
      const double fx = f(x);
      if (fx < prev_f) drop = std::make_pair(prev_x, x);
      prev_x = x;
      prev_f = fx;
    }
    Claim c = claim("f decreases somewhere in (0, " + num(delta) + "), so it is not one-to-one there",
                    drop.has_value());
    if (drop) c.witness("x1", drop->first).witness("x2", drop->second).witness("f_x1", f(drop->first))
                  .witness("f_x2", f(drop->second));
    out.push_back(std::move(c));
  }
  return out;
}

Claims reparametrization(const Config& config) {
  Claims out;
  const auto& gamma = cat().curve("quarter-circle");
  const auto& eta = cat().curve("quarter-circle-sq");
  curves::ReparamOptions options;
  options.tol = config.residual_tol;
  options.injectivity_grid = config.injectivity_grid;
  const auto table = curves::reparametrize(gamma, eta, config.reparam_grid, options);

  double max_err = 0.0;
  double max_phi_rel = 0.0;
  bool positive = table.orientation_preserving;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    max_err = std::max(max_err, std::fabs(row.s - std::sqrt(row.t)));
    if (!(row.phi_prime > 0.0)) positive = false;
    if (i > 0 && i + 1 < table.rows.size()) {
      const double exact = 0.5 / std::sqrt(row.t);
      max_phi_rel = std::max(max_phi_rel, std::fabs(row.phi_prime - exact) / exact);
    }
  }
  out.push_back(claim("quarter circle to (cos s^2, sin s^2): phi(t) = sqrt(t) within 1e-8", max_err <= 1e-8)
                    .witness("max_abs_error", max_err)
                    .witness("rows", as_int(table.rows.size())));
  out.push_back(claim("residual |gamma(t) - eta(phi(t))| stays within the tolerance",
                      table.max_residual() <= config.residual_tol)
                    .witness("max_residual", table.max_residual())
                    .witness("tolerance", config.residual_tol));
  out.push_back(claim("phi' is positive with no floor violations", positive && table.violations.empty())
                    .witness("violations", as_int(table.violations.size())));
  out.push_back(claim("phi' = 1/(2 sqrt t) at interior rows within 1e-6 relative", max_phi_rel <= 1e-6)
                    .witness("max_relative_error", max_phi_rel));

  std::vector<double> ss;
  ss.reserve(table.rows.size());
  for (const auto& row : table.rows) ss.push_back(row.s);
  const auto back = curves::reparametrize_at(eta, gamma, ss, options);
  double round_trip = 0.0;
  for (std::size_t i = 0; i < back.rows.size(); ++i)
    round_trip = std::max(round_trip, std::fabs(back.rows[i].s - table.rows[i].t));
  out.push_back(claim("the inverse table maps s back to t within 1e-7", round_trip <= 1e-7)
                    .witness("max_round_trip_error", round_trip));

  const auto verdict = curves::claim1_check(gamma, eta, table);
  out.push_back(claim("where the solving component of eta has nonzero slope, gamma's does too", verdict.holds())
                    .witness("rows_checked", as_int(verdict.rows_checked))
                    .witness("violations", as_int(verdict.violations.size())));
  return out;
}

Claims same_trace_non_equivalent(const Config& config) {
  Claims out;
  const auto& c3 = cat().curve("circle-3pi");
  const auto pairs = curves::injectivity_probe(c3, config.injectivity_grid, 1.0, 1e-9);
  bool shifted = !pairs.empty();
  double worst_shift = 0.0;
  double worst_distance = 0.0;
  for (const auto& p : pairs) {
    worst_shift = std::max(worst_shift, std::fabs(p.t2 - p.t1 - 2.0 * kPi));
    worst_distance = std::max(worst_distance, p.distance);
  }
  shifted = shifted && worst_shift <= 1e-6 && worst_distance <= 1e-9;
  Claim c = claim("the circle on [0, 3 pi] revisits points: pairs (t, t + 2 pi) with |delta| <= 1e-9", shifted);
  c.witness("pairs", as_int(pairs.size()));
  if (!pairs.empty()) c.witness("t1", pairs.front().t1).witness("t2", pairs.front().t2);
  c.witness("max_shift_error", worst_shift).witness("max_distance", worst_distance);
  out.push_back(std::move(c));

  curves::ReparamOptions options;
  options.tol = config.residual_tol;
  options.injectivity_grid = config.injectivity_grid;
  std::string outcome = "accepted";
  try {
    curves::reparametrize(cat().curve("circle-2pi"), c3, config.reparam_grid, options);
  } catch (const curves::TracesDifferError& e) {
    outcome = e.what();
  }
  out.push_back(claim("circle [0, 2 pi] and circle [0, 3 pi] share a trace but are rejected as non-equivalent",
                      outcome != "accepted")
                    .witness("reason", outcome));

  const auto arc = curves::injectivity_probe(cat().curve("quarter-circle"), config.injectivity_grid, 0.1);
  out.push_back(claim("the quarter circle shows no coincidences", arc.empty()).witness("pairs", as_int(arc.size())));

  const auto eight = curves::injectivity_probe(cat().curve("gerono"), config.injectivity_grid, 1.0);
  bool origin = false;
  for (const auto& p : eight) {
    const auto q = cat().curve("gerono").point(p.t1);
    if (std::fabs(q[0]) <= 1e-9 && std::fabs(q[1]) <= 1e-9) origin = true;
  }
  out.push_back(claim("the figure eight passes the origin more than once", origin)
                    .witness("pairs", as_int(eight.size())));
  return out;
}

Claims onesided_osc(const Config& config) {
  Claims out;
  const double h = 1.0 / (1e4 * kPi);
  const auto F = quadrature::onesided_osc_F(h, config.quad_tol);
  out.push_back(claim("F(h)/h <= 0.05 at h = 1/(1e4 pi)", F.value / h <= 0.05, F.converged)
                    .witness("F_h", F.value)
                    .witness("ratio", F.value / h)
                    .witness("abs_error_estimate", F.abs_error_estimate));

  const auto f = catalog::make_onesided_osc(config.quad_tol);
  const auto d0 = numdiff::derivative(f, 0.0);
  out.push_back(claim("finite-difference estimate of F'(0) is at most 0.05", std::fabs(d0.value) <= 0.05)
                    .witness("estimate", d0.value)
                    .witness("step", d0.step));

  // Peaks of the integrand sit at t = 1/(m pi), where |cos(1/t)| = 1.
  for (const double delta : {1e-1, 1e-2, 1e-3}) {
    double sup = 0.0;
    double arg = 0.0;
    const double m0 = std::ceil(1.0 / (delta * kPi)) + 1.0;
    for (double m = m0; m < m0 + 1000.0; m += 1.0) {
      const double t = 1.0 / (m * kPi);
      const double v = fn::onesided_integrand(t);
      if (v > sup) {
        sup = v;
        arg = t;
      }
    }
    out.push_back(claim("sup of F' on (0, " + num(delta) + ") is at least 0.99", sup >= 0.99)
                      .witness("sup", sup)
                      .witness("at", arg));
  }

  constexpr std::size_t kSamples = 1'000'000;
  std::size_t negative = 0;
  for (std::size_t i = 0; i < kSamples; ++i) {
    const double t = -1.0 + 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(kSamples);
    if (fn::onesided_integrand(t) < 0.0) ++negative;
  }
  out.push_back(claim("F' >= 0 at every sample of [-1, 1]", negative == 0)
                    .witness("samples", as_int(kSamples))
                    .witness("negative", as_int(negative)));

  // F(1/(N pi)) N pi on a doubling ladder of N.
  std::vector<double> ns;
  for (double n = 1.0; n <= 8192.0; n *= 2.0) ns.push_back(n);
  ns.push_back(1e4);
  std::vector<double> ratios;
  bool converged = true;
  for (const double n : ns) {
    const auto r = quadrature::onesided_osc_F(1.0 / (n * kPi), config.quad_tol);
    converged = converged && r.converged;
    ratios.push_back(r.value * n * kPi);
  }
  std::size_t first = ns.size();
  for (std::size_t i = ns.size(); i-- > 0;) {
    const bool tail_ok = ratios[i] < 0.05 && (i + 1 == ns.size() || ratios[i + 1] < ratios[i]);
    if (!tail_ok) break;
    first = i;
  }
  Claim ladder = claim("F(x)/x -> 0: F(1/(N pi)) N pi decreases below 0.05 from some N1 <= 1e4 on",
                       first < ns.size(), converged);
  if (first < ns.size()) ladder.witness("N1", ns[first]).witness("ratio_at_N1", ratios[first]);
  ladder.witness("ratio_at_1e4", ratios.back());
  out.push_back(std::move(ladder));

  const auto plus = quadrature::onesided_osc_F(0.5, config.quad_tol);
  const auto minus = quadrature::onesided_osc_F(-0.5, config.quad_tol);
  out.push_back(claim("F(-x) = -F(x)", minus.value == -plus.value).witness("F_half", plus.value));

  // Unbounded variant: same tail machinery, derivative blows up at peaks.
  const auto G = quadrature::onesided_osc_unbounded_F(h, config.quad_tol);
  out.push_back(claim("unbounded variant: G(h)/h <= 0.05 at h = 1/(1e4 pi)", G.value / h <= 0.05, G.converged)
                    .witness("ratio", G.value / h));
  for (const double delta : {1e-2, 1e-4}) {
    const double m = std::ceil(1.0 / (delta * kPi)) + 1.0;
    const double t = 1.0 / (m * kPi);
    const double v = fn::onesided_unbounded_integrand(t);
    const double bound = 0.5 / std::sqrt(delta);
    out.push_back(claim("unbounded variant: sampled G' on (0, " + num(delta) + ") exceeds " +
                            num(bound) + " (sampled sup only)",
                        v > bound)
                      .witness("sampled_sup", v)
                      .witness("at", t));
  }
  return out;
}

Claims tail_bound_chain(const Config& config) {
  Claims out;
  const double alpha = quadrature::tail_alpha();
  const long n0 = quadrature::tail_threshold_N0();
  out.push_back(claim("N0 = least N >= 16 with (1 - pi^2/(4 sqrt k))^(sqrt(k) pi) <= alpha for all k >= N0",
                      n0 >= 16 && n0 <= 100)
                    .witness("N0", static_cast<std::int64_t>(n0))
                    .witness("alpha", alpha));

  for (const long n : {n0, 100L, 400L}) {
    const auto check = quadrature::tail_bound(n, config.quad_tol);
    out.push_back(claim("int_0^(1/((N+1) pi)) F' <= 8/(5 pi) N^(-5/4) + 2 alpha^sqrt(N)/(pi log(1/alpha)) at N = " +
                            std::to_string(n),
                        check.holds() && check.numeric_value >= 0.0)
                      .witness("numeric", check.numeric_value)
                      .witness("bound", check.analytic_bound));
  }

  bool periods_ok = true;
  double worst_ratio = 0.0;
  long worst_k = 0;
  for (long k = 16; k <= 200; ++k) {
    const auto p = quadrature::period_bounds(k);
    periods_ok = periods_ok && p.holds();
    for (const double r : {p.head / p.head_bound, p.end / p.end_bound}) {
      if (r > worst_ratio) {
        worst_ratio = r;
        worst_k = k;
      }
    }
  }
  out.push_back(claim("per-period pieces obey 1/(pi k^(9/4)) and the middle bound for k = 16..200", periods_ok)
                    .witness("worst_ratio", worst_ratio)
                    .witness("worst_k", static_cast<std::int64_t>(worst_k)));

  const auto cosine = quadrature::cosine_estimate(10000);
  out.push_back(claim("cos y <= 1 - y^2/4 on [0, pi/2]", cosine.holds)
                    .witness("worst_margin", cosine.worst_margin)
                    .witness("worst_at", cosine.worst_at));
  return out;
}

Claims improper_unbounded(const Config& config) {
  Claims out;
  const auto ic = quadrature::improper_convergence_xsinx3(1e-3, 1000);
  bool alternating = true;
  bool crude = true;
  for (std::size_t k = 0; k < ic.segments.size(); ++k) {
    if ((ic.segments[k] > 0.0) != (k % 2 == 0)) alternating = false;
    if (k >= 1 && k <= 1000 &&
        std::fabs(ic.segments[k]) > kPi / (3.0 * std::cbrt(static_cast<double>(k) * kPi)))
      crude = false;
  }
  out.push_back(claim("segments over [k pi, (k+1) pi] alternate and |segment| decreases for k <= 1000",
                      alternating && ic.magnitudes_decreasing)
                    .witness("segments", as_int(ic.segments.size())));
  out.push_back(claim("|segment k| <= pi/(3 (k pi)^(1/3)) for 1 <= k <= 1000", crude));
  out.push_back(claim("Cauchy spread of the (averaged) partial sums is below 1e-3", ic.cauchy_ok && ic.spread < 1e-3)
                    .witness("spread", ic.spread)
                    .witness("averaging_level", static_cast<std::int64_t>(ic.acceleration_level))
                    .witness("limit_estimate", ic.limit_estimate));

  const auto& f = cat().entry("improper-unbounded");
  const std::vector<double> rs{4.0, 8.0};
  const auto probes = quadrature::unboundedness_probe(f, rs, config.probe_grid);
  for (const auto& p : probes) {
    const double need = 0.875 * p.R;  // peaks x |sin(x^3)| ~ x recur in every unit window
    out.push_back(claim("max |x sin(x^3)| on [0, " + num(p.R) + "] >= 7R/8",
                        p.max_abs >= need)
                      .witness("R", p.R)
                      .witness("max_abs", p.max_abs)
                      .witness("argmax", p.argmax));
  }
  return out;
}

Claims decay_wild_deriv(const Config&) {
  Claims out;
  const auto& f = cat().entry("decay-wild-deriv");
  for (const double r : {1.0, 10.0, 100.0}) {
    const auto p = quadrature::max_abs_on(f, r, 2.0 * r, 10000);
    out.push_back(claim("max |sin(x^3)/x| on [R, 2R] <= 1/R at R = " + num(r),
                        p.max_abs <= 1.0 / r)
                      .witness("max_abs", p.max_abs));
  }
  for (const double r : {10.0, 100.0, 1000.0}) {
    const auto p = quadrature::max_abs_slope_on(f, r, r + 1e-2, 1000);
    out.push_back(claim("sampled |f'| on [R, R + 0.01] exceeds R at R = " + num(r),
                        p.max_abs > r)
                      .witness("max_abs_slope", p.max_abs)
                      .witness("argmax", p.argmax));
  }
  return out;
}

Claims parabola_trap(const Config& config) {
  Claims out;
  const auto& f = cat().bivariate("parabola-trap");
  const auto verdict = multivar::extremum_verdict(f, {0.0, 0.0}, config.directions);
  const bool lines = verdict.every_line_passes();
  out.push_back(claim("t -> f(t v) has a strict minimum at 0 along every sampled direction", lines)
                    .witness("directions", as_int(verdict.directions_tested))
                    .witness("passes", as_int(verdict.line_test_passes)));

  const auto& w = verdict.refutation_witness;
  const bool refuted = w && w->value < -1e-12 && std::hypot(w->point[0], w->point[1]) <= 1e-2;
  Claim c = claim("a parabola through 0 reaches f < -1e-12 within distance 1e-2", refuted);
  if (w) c.witness("x", w->point[0]).witness("y", w->point[1]).witness("f", w->value);
  out.push_back(std::move(c));
  out.push_back(claim("so 0 is a minimum on every line yet not a local minimum", lines && refuted));

  std::int64_t worst_ulps = 0;
  for (int i = 0; i < 1000; ++i) {
    const double t = -1.0 + 2.0 * i / 999.0;
    worst_ulps = std::max(worst_ulps, ulp_distance(f.eval(2.0 * t, t * t), minus_three_t4(t)));
  }
  out.push_back(claim("f(2t, t^2) = -3 t^4 to 4 ulps", worst_ulps <= 4).witness("worst_ulps", worst_ulps));

  const auto& h = *verdict.hessian;
  const bool psd = h.cls == multivar::HessianClass::PositiveSemidefinite &&
                   std::fabs(h.eigenvalues[0]) <= 1e-4 && std::fabs(h.eigenvalues[1] - 10.0) <= 1e-4;
  out.push_back(claim("Hessian at 0 is positive semidefinite with eigenvalues {0, 10}", psd)
                    .witness("class", std::string(multivar::to_string(h.cls)))
                    .witness("lambda_min", h.eigenvalues[0])
                    .witness("lambda_max", h.eigenvalues[1]));

  bool region = true;
  for (int i = 1; i <= 40; ++i) {
    const double x = 0.025 * i;
    const double x2 = x * x;
    for (int j = 1; j < 40; ++j) {
      const double y = -x2 + 2.5 * x2 * j / 40.0;
      const double lo = x2 / 5.0;
      if (std::fabs(y - lo) < 1e-9 || std::fabs(y - x2) < 1e-9) continue;
      const bool inside = lo < y && y < x2;
      if ((f.eval(x, y) < 0.0) != inside || (f.eval(-x, y) < 0.0) != inside) region = false;
    }
  }
  out.push_back(claim("f < 0 exactly where x^2/5 < y < x^2 (sampled)", region));
  return out;
}

Claims osc_curve_trap(const Config&) {
  Claims out;
  const auto& f = cat().bivariate("osc-curve-trap");
  const auto v = multivar::curve_restriction_check(f);
  Claim on = claim("f(x, sin(1/x)) > 0 for 1e-3 <= |x| <= 1", v.on_curve_ok());
  on.witness("samples", as_int(v.on_curve_samples)).witness("positive", as_int(v.on_curve_positive));
  out.push_back(std::move(on));

  std::size_t complete = 0;
  for (const auto& a : v.annuli) complete += a.complete() ? 1 : 0;
  Claim annuli = claim("every dyadic annulus holds points with f > 0 above and f < 0 below the curve", v.annuli_ok());
  annuli.witness("annuli", as_int(v.annuli.size())).witness("complete", as_int(complete));
  if (!v.annuli.empty() && v.annuli.back().negative) {
    const auto& n = *v.annuli.back().negative;
    annuli.witness("innermost_negative_x", n.point[0])
        .witness("innermost_negative_y", n.point[1])
        .witness("innermost_negative_log_abs", n.value.log_abs);
  }
  out.push_back(std::move(annuli));

  const auto at = f.eval_signed_log(0.01, std::sin(100.0));
  out.push_back(claim("on the curve at x = 0.01, f = exp(-1e8) > 0", at.sign == 1 && std::fabs(at.log_abs + 1e8) <= 1e-6)
                    .witness("log_f", at.log_abs));
  out.push_back(claim("f(0, 0) = 0", f.eval(0.0, 0.0) == 0.0));
  return out;
}

Claims torsion_osc(const Config& config) {
  Claims out;
  const auto& f = cat().entry("torsion-osc");
  const auto t = numdiff::tangent_side_test(f, 0.0, Interval::closed(-0.1, 0.1));
  out.push_back(claim("torsion-osc crosses its tangent y = 0 at 0", t.torsion_point)
                    .witness("slope", t.slope)
                    .witness("samples", as_int(t.samples)));

  const auto cube = catalog::make_entry("cube", Interval::real_line(), [](double x) { return x * x * x; },
                                        [](double x) { return 3.0 * x * x; }, true);
  const auto square = catalog::make_entry("square", Interval::real_line(), [](double x) { return x * x; },
                                          [](double x) { return 2.0 * x; });
  const auto tc = numdiff::tangent_side_test(cube, 0.0, Interval::closed(-1.0, 1.0));
  const auto ts = numdiff::tangent_side_test(square, 0.0, Interval::closed(-1.0, 1.0));
  out.push_back(claim("x^3 is a torsion point at 0, x^2 is not", tc.torsion_point && !ts.torsion_point));

  const std::size_t grid = std::max<std::size_t>(config.scan_grid / 10, 4);
  for (const auto& iv : {Interval::open(1e-3, 1e-1), Interval::open(-1e-1, -1e-3)}) {
    const auto c = numdiff::convexity_scan(f, iv, grid);
    Claim cl = claim("second differences of torsion-osc take both signs on " + span_text(iv),
                     c.neither_convex_nor_concave());
    if (c.positive) cl.witness("positive_x", c.positive->x);
    if (c.negative) cl.witness("negative_x", c.negative->x);
    out.push_back(std::move(cl));
  }

  const catalog::Rational third(2, 3);
  out.push_back(claim("exact rational branch: (2/3)^3 = 8/27",
                      catalog::rational_torsion_eval(third) == catalog::Rational(8, 27)));
  return out;
}

curves::ParametricCurve phase_graph(double delta) {
  // (t, t^2 sin(1/t^2)) on [delta, 1] in the phase variable p = 1/t^2.
  return curves::ParametricCurve(
      "graph-x2sin-phase", 1.0, 1.0 / (delta * delta),
      {[](double p) { return 1.0 / std::sqrt(p); }, [](double p) { return std::sin(p) / p; }},
      {[](double p) { return -0.5 / (p * std::sqrt(p)); },
       [](double p) { return (p * std::cos(p) - std::sin(p)) / (p * p); }});
}

Claims rectifiability(const Config& config) {
  Claims out;
  std::vector<double> lengths;
  for (int j = 0; j <= 4; ++j) {
    const double delta = 0.1 * std::ldexp(1.0, -j);
    const auto g = phase_graph(delta);
    const auto points = static_cast<std::size_t>(std::ceil(20.0 * (g.b() - g.a()))) + 1;
    lengths.push_back(curves::polygon_length(g, points));
  }
  double min_step = kInf;
  for (std::size_t i = 1; i < lengths.size(); ++i) min_step = std::min(min_step, lengths[i] - lengths[i - 1]);
  out.push_back(claim("length of the graph of x^2 sin(1/x^2) over [delta, 1] grows by >= 0.8 per halving of delta",
                      min_step >= 0.8)
                    .witness("length_delta_0.1", lengths.front())
                    .witness("length_delta_0.00625", lengths.back())
                    .witness("min_growth_per_halving", min_step)
                    .witness("predicted_growth", 4.0 / kPi * std::log(2.0)));

  const auto circle = curves::arclength(cat().curve("circle-2pi"), config.arclength_grid);
  out.push_back(claim("circle length converges to 2 pi within 1e-4",
                      std::fabs(circle.lower_bound - 2.0 * kPi) <= 1e-4 && !circle.diverging)
                    .witness("length", circle.lower_bound));
  const auto segment = curves::arclength(cat().curve("segment"), 2);
  out.push_back(claim("segment (0,0)-(1,1) has length sqrt 2", std::fabs(segment.lower_bound - std::sqrt(2.0)) <= 1e-15 &&
                                                                   !segment.diverging)
                    .witness("length", segment.lower_bound));
  return out;
}

Claims min_no_flank(const Config& config) {
  Claims out;
  const auto& f = cat().entry("min-no-flank");
  bool positive = f(0.0) == 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double ax = std::pow(10.0, -6.0 + 5.0 * i / 9999.0);
    positive = positive && f(ax) > 0.0 && f(-ax) > 0.0;
  }
  out.push_back(claim("strict minimum: f(0) = 0 < f(x) for 1e-6 <= |x| <= 0.1", positive));

  numdiff::ScanOptions options;
  options.min_abs_x = config.min_abs_x;
  const std::size_t grid = std::max<std::size_t>(config.scan_grid / 10, 1);
  for (const auto& iv : {Interval::open(1e-3, 1e-1), Interval::open(-1e-1, -1e-3)}) {
    const auto scan = numdiff::sign_change_scan(f, iv, grid, options);
    Claim c = claim("f' takes both signs on " + span_text(iv) + ": the flank is not monotone", scan.both_signs());
    if (scan.positive_witness) c.witness("positive_x", scan.positive_witness->x);
    if (scan.negative_witness) c.witness("negative_x", scan.negative_witness->x);
    out.push_back(std::move(c));
  }

  const auto fd = numdiff::derivative(f, 0.1);
  const double exact = fn::min_no_flank_derivative(0.1);
  out.push_back(claim("analytic f'(0.1) matches the finite-difference estimate within 1e-6",
                      std::fabs(fd.value - exact) <= 1e-6)
                    .witness("analytic", exact)
                    .witness("estimate", fd.value));

  const auto conv = numdiff::convexity_scan(f, Interval::open(1e-3, 1e-2), grid);
  out.push_back(claim("second differences take both signs on (1e-3, 1e-2)", conv.neither_convex_nor_concave()));
  return out;
}

struct Registered {
  std::string summary;
  CaseFn run;
};

const std::map<std::string, Registered, std::less<>>& registry() {
  static const std::map<std::string, Registered, std::less<>> table{
      {"decay-wild-deriv", {"sin(x^3)/x tends to 0 while f' is unbounded", decay_wild_deriv}},
      {"improper-unbounded", {"x sin(x^3): convergent improper integral of an unbounded function", improper_unbounded}},
      {"inj-fail", {"x + a x^2 sin(1/x^2): f'(0) = 1 yet not one-to-one near 0", inj_fail}},
      {"inverse-counterexample", {"bijection with f'(0) = 1 whose inverse is not continuous", inverse_counterexample}},
      {"inverse-derivative-formula", {"(f^-1)'(f(x0)) = 1/f'(x0) for strictly monotone f", inverse_derivative_formula}},
      {"min-no-flank", {"x^4 (2 + sin(1/x)): strict minimum without monotone flanks", min_no_flank}},
      {"onesided-osc", {"int_0^x |cos(1/t)|^(1/|t|) dt: f' oscillates only above f'(0)", onesided_osc}},
      {"osc-curve-trap", {"strict minimum along y = sin(1/x), none at the origin", osc_curve_trap}},
      {"parabola-trap", {"(5y - x^2)(y - x^2): minimum on every line, none at 0", parabola_trap}},
      {"rectifiability", {"graphs of x^2 sin(1/x^2) type have infinite length", rectifiability}},
      {"reparametrization", {"equal traces of injective regular curves differ by a regular reparametrization",
                             reparametrization}},
      {"same-trace-non-equivalent", {"same trace, not equivalent once injectivity fails", same_trace_non_equivalent}},
      {"tail-bound-chain", {"tail estimate of the one-sided integral", tail_bound_chain}},
      {"torsion-osc", {"torsion point that is not an inflection point", torsion_osc}},
  };
  return table;
}

}  // namespace

const std::vector<CaseInfo>& case_registry() {
  static const std::vector<CaseInfo> list = [] {
    std::vector<CaseInfo> out;
    for (const auto& [id, reg] : registry()) out.push_back({id, reg.summary});
    return out;
  }();
  return list;
}

VerificationReport run_case(std::string_view id, const Config& config, bool timings) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw UnknownIdError(std::string(id));
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.case_id = it->first;
  report.claims = it->second.run(config);
  report.status = aggregate(report.claims);
  report.config_digest = config_digest(config);
  if (timings) {
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                            .count();
  }
  return report;
}

std::vector<VerificationReport> run_all(const Config& config, bool timings) {
  std::vector<std::future<VerificationReport>> jobs;
  for (const auto& info : case_registry()) {
    jobs.push_back(std::async(std::launch::async, [&config, timings, id = info.id] {
      return run_case(id, config, timings);
    }));
  }
  std::vector<VerificationReport> out;
  out.reserve(jobs.size());
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

}  // namespace pathlab
