#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pathlab/catalog.hpp"
#include "pathlab/functions.hpp"
#include "pathlab/quadrature.hpp"

using namespace pathlab;
using std::numbers::pi;

namespace {

double integrand(double u) {  // |cos u|^u / u^2, straightforward pow
  return std::pow(std::fabs(std::cos(u)), u) / (u * u);
}

template <typename F>
double midpoint(F f, double a, double b, std::size_t n) {
  const double h = (b - a) / static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += f(a + (static_cast<double>(i) + 0.5) * h);
  return sum * h;
}

}  // namespace

TEST_CASE("Gauss-Kronrod is exact on cubics") {
  const auto r = quadrature::integrate([](double x) { return x * x * x - 2.0 * x + 1.0; }, 0.0, 2.0, 1e-12);
  CHECK(r.converged);
  CHECK(std::fabs(r.value - 2.0) <= r.abs_error_estimate + 1e-14);
  const auto s = quadrature::integrate([](double x) { return 3.0 * x * x; }, -1.0, 4.0, 1e-12);
  CHECK(std::fabs(s.value - 65.0) <= s.abs_error_estimate + 1e-13);
}

TEST_CASE("integral of sine over a half period") {
  const auto r = quadrature::integrate([](double x) { return std::sin(x); }, 0.0, pi, 1e-12);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("depth limit reports non-convergence") {
  const auto r = quadrature::integrate([](double x) { return 1.0 / std::sqrt(std::fabs(x - 0.3)); }, 0.0, 1.0,
                                       1e-15, 3);
  CHECK_FALSE(r.converged);
}

TEST_CASE("cosine estimate on a quarter period") {
  const auto c = quadrature::cosine_estimate(10000);
  CHECK(c.holds);
  CHECK(c.worst_margin >= 0.0);
  for (int i = 0; i <= 100; ++i) {
    const double y = 0.5 * pi * i / 100.0;
    CHECK(std::cos(y) <= 1.0 - y * y / 4.0 + 1e-15);
  }
}

TEST_CASE("per-period bounds for k >= 16") {
  for (long k = 16; k <= 200; ++k) {
    CAPTURE(k);
    const auto p = quadrature::period_bounds(k);
    CHECK(p.a <= p.b);
    CHECK(p.b <= p.c);
    CHECK(p.c <= p.a_next);
    const double bound = 1.0 / (pi * std::pow(static_cast<double>(k), 2.25));
    CHECK(p.head_bound == doctest::Approx(bound));
    CHECK(p.head <= p.head_bound);
    CHECK(p.end <= p.end_bound);
    CHECK(p.head >= 0.0);
  }
}

TEST_CASE("first controlled period against a Riemann sum") {
  const auto r = quadrature::integrate(integrand, 16.0 * pi, 17.0 * pi, 1e-13);
  const double oracle = midpoint(integrand, 16.0 * pi, 17.0 * pi, 2'000'000);
  CHECK(std::fabs(r.value - oracle) <= 1e-11);
  // crude bound: |cos u|^u <= 1
  CHECK(r.value <= pi / (16.0 * pi * 16.0 * pi));
}

TEST_CASE("tail remainder tracks a brute-force period sum") {
  const auto tail = quadrature::kOnesidedTail;
  const double modelled = quadrature::tail_remainder_estimate(tail, 1000.0) -
                          quadrature::tail_remainder_estimate(tail, 4000.0);
  double brute = 0.0;
  for (long k = 1000; k < 4000; ++k) brute += midpoint(integrand, k * pi, (k + 1) * pi, 1000);
  CHECK(modelled == doctest::Approx(brute).epsilon(1e-3));
}

TEST_CASE("one-sided integral against a direct sum") {
  const auto F = quadrature::onesided_osc_F(1.0);
  REQUIRE(F.converged);
  double partial = 0.0;
  partial += midpoint(integrand, 1.0, pi, 20000);
  for (long k = 1; k < 1000; ++k) partial += midpoint(integrand, k * pi, (k + 1) * pi, 1000);
  // every later period contributes at most pi / (k pi)^2
  double crude_tail = 0.0;
  for (long k = 1000; k < 10'000'000; ++k) crude_tail += 1.0 / (pi * static_cast<double>(k) * static_cast<double>(k));
  CHECK(F.value >= partial - 1e-9);
  CHECK(F.value <= partial + crude_tail);
  CHECK(quadrature::onesided_osc_F(-0.5).value == -quadrature::onesided_osc_F(0.5).value);
}

TEST_CASE("F(x)/x decreases along x = 1/(N pi)") {
  double prev = 1.0;
  for (double N : {100.0, 1000.0, 10000.0}) {
    const double h = 1.0 / (N * pi);
    const double ratio = quadrature::onesided_osc_F(h, 1e-14).value / h;
    CAPTURE(N);
    CHECK(ratio < prev);
    CHECK(ratio < 0.05);
    prev = ratio;
  }
}

TEST_CASE("tail threshold and bound chain") {
  const double alpha = 0.5 * (1.0 + std::exp(-pi * pi * pi / 4.0));
  CHECK(quadrature::tail_alpha() == doctest::Approx(alpha).epsilon(1e-15));
  CHECK(alpha == doctest::Approx(0.5002150336).epsilon(1e-10));
  const long n0 = quadrature::tail_threshold_N0(100000);
  CHECK(n0 >= 1);
  CHECK(n0 <= 100);
  for (long n : {n0, 100L, 400L}) {
    CAPTURE(n);
    const auto t = quadrature::tail_bound(n);
    CHECK(t.numeric_value <= t.analytic_bound);
    CHECK(t.numeric_value > 0.0);
  }
}

TEST_CASE("x sin(x^3) segments") {
  for (std::size_t k : {1, 5, 50}) {
    const double a = k * pi;
    const double b = (k + 1) * pi;
    const double oracle = midpoint([](double y) { return std::sin(y) / (3.0 * std::cbrt(y)); }, a, b, 100000);
    CHECK(quadrature::xsinx3_segment(k) == doctest::Approx(oracle).epsilon(1e-8));
  }
}

TEST_CASE("x sin(x^3) converges to its closed form") {
  const double limit = std::tgamma(2.0 / 3.0) * std::sin(pi / 3.0) / 3.0;
  CHECK(limit == doctest::Approx(0.390900178421167).epsilon(1e-14));
  const auto c = quadrature::improper_convergence_xsinx3(1e-3);
  CHECK(c.cauchy_ok);
  CHECK(c.magnitudes_decreasing);
  CHECK(c.spread < 1e-3);
  CHECK(std::fabs(c.limit_estimate - limit) <= c.spread);
  for (std::size_t k = 1; k + 1 < c.segments.size() && k < 1000; ++k) {
    CHECK(std::fabs(c.segments[k + 1]) < std::fabs(c.segments[k]));
    CHECK(c.segments[k] * c.segments[k + 1] < 0.0);
  }
}

TEST_CASE("x sin(x^3) is unbounded on samples") {
  const auto& e = catalog::Catalog::standard().entry("improper-unbounded");
  const std::vector<double> radii{2.0, 4.0, 8.0};
  const auto probes = quadrature::unboundedness_probe(e, radii, 100000);
  REQUIRE(probes.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(probes[i].max_abs >= 0.875 * radii[i]);
  CHECK(probes[2].max_abs >= 7.0);
}

TEST_CASE("decaying function with a wild derivative") {
  const auto& e = catalog::Catalog::standard().entry("decay-wild-deriv");
  for (double R : {10.0, 100.0}) {
    CHECK(quadrature::max_abs_on(e, R, 2.0 * R, 100000).max_abs <= 1.0 / R);
    CHECK(quadrature::max_abs_slope_on(e, R, R + 0.01, 100000).max_abs > R);
  }
}
