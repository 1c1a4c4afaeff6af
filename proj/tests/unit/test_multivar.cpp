#include <cmath>

#include "doctest.h"
#include "pathlab/catalog.hpp"
#include "pathlab/multivar.hpp"
#include "support.hpp"

using namespace pathlab;
using multivar::HessianClass;
using test_support::uniform;

namespace {

catalog::BivariateEntry quadratic(double a, double b, double c) {
  catalog::BivariateEntry e;
  e.id = "quadratic";
  e.eval = [=](double x, double y) { return a * x * x + 2.0 * b * x * y + c * y * y; };
  return e;
}

const catalog::BivariateEntry& trap() { return catalog::Catalog::standard().bivariate("parabola-trap"); }

}  // namespace

TEST_CASE("Hessian of simple quadratics") {
  const auto bowl = multivar::hessian_classify(quadratic(1.0, 0.0, 1.0), {0.3, -0.2});
  CHECK(bowl.cls == HessianClass::PositiveDefinite);
  CHECK(bowl.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(bowl.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-6));

  const auto saddle = multivar::hessian_classify(quadratic(0.0, 0.5, 0.0), {0.0, 0.0});
  CHECK(saddle.cls == HessianClass::Indefinite);
  CHECK(saddle.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(saddle.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-6));

  CHECK(multivar::hessian_classify(quadratic(0.0, 0.0, 0.0), {1.0, 1.0}).cls == HessianClass::Zero);
  CHECK(multivar::hessian_classify(quadratic(-1.0, 0.0, 0.0), {0.0, 0.0}).cls == HessianClass::NegativeSemidefinite);
}

TEST_CASE("definiteness agrees with the trace-determinant rule") {
  for (int i = 0; i < 500; ++i) {
    const double a = uniform(-3.0, 3.0);
    const double b = uniform(-3.0, 3.0);
    const double c = uniform(-3.0, 3.0);
    const double det = a * c - b * b;
    if (std::fabs(det) < 0.05) continue;  // stay clear of the zero band
    const auto h = multivar::hessian_classify(quadratic(a, b, c), {uniform(-1.0, 1.0), uniform(-1.0, 1.0)});
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(c);
    if (det < 0.0) {
      CHECK(h.cls == HessianClass::Indefinite);
    } else {
      CHECK(h.cls == (a > 0.0 ? HessianClass::PositiveDefinite : HessianClass::NegativeDefinite));
    }
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b), std::fabs(c)});
    CHECK(h.asymmetry <= 1e-6 * scale);
  }
}

TEST_CASE("parabola trap Hessian") {
  const auto origin = multivar::hessian_classify(trap(), {0.0, 0.0});
  CHECK(origin.cls == HessianClass::PositiveSemidefinite);
  CHECK(std::fabs(origin.eigenvalues[0]) <= 1e-4);
  CHECK(origin.eigenvalues[1] == doctest::Approx(10.0).epsilon(1e-5));

  // f = x^4 - 6 x^2 y + 5 y^2: f_xx = 12 x^2 - 12 y, f_xy = -12 x, f_yy = 10
  const auto off = multivar::hessian_classify(trap(), {1.0, 0.5});
  CHECK(off.matrix[0][0] == doctest::Approx(6.0).epsilon(1e-6));
  CHECK(off.matrix[0][1] == doctest::Approx(-12.0).epsilon(1e-6));
  CHECK(off.matrix[1][1] == doctest::Approx(10.0).epsilon(1e-6));
  CHECK(off.asymmetry <= 1e-6 * 12.0);
}

TEST_CASE("every line through the origin sees a minimum") {
  const auto sweep = multivar::direction_sweep(trap(), {0.0, 0.0});
  CHECK(sweep.directions_tested == 360);
  CHECK(sweep.every_line_passes());
}

TEST_CASE("a parabola refutes the minimum") {
  const auto w = multivar::path_refutation(trap(), {0.0, 0.0});
  REQUIRE(w);
  CHECK(w->value < -1e-12);
  CHECK(std::hypot(w->point[0], w->point[1]) <= 1e-2);
  CHECK(trap().eval(w->point[0], w->point[1]) == w->value);
  const auto v = multivar::extremum_verdict(trap(), {0.0, 0.0});
  CHECK(v.every_line_passes());
  CHECK(v.refutation_witness);
}

TEST_CASE("a genuine minimum has no refutation") {
  const auto bowl = quadratic(1.0, 0.0, 1.0);
  CHECK(multivar::direction_sweep(bowl, {0.0, 0.0}, 72).every_line_passes());
  CHECK_FALSE(multivar::path_refutation(bowl, {0.0, 0.0}));
}

TEST_CASE("line test on a saddle") {
  const auto saddle = quadratic(0.0, 0.5, 0.0);
  CHECK(multivar::line_restriction_test(saddle, {0.0, 0.0}, {1.0, 1.0}).passed);
  const auto down = multivar::line_restriction_test(saddle, {0.0, 0.0}, {1.0, -1.0});
  CHECK_FALSE(down.passed);
  CHECK(down.failure_t);
}

TEST_CASE("osc curve trap is positive on the curve with both signs nearby") {
  const auto v = multivar::curve_restriction_check(catalog::Catalog::standard().bivariate("osc-curve-trap"));
  CHECK(v.on_curve_ok());
  CHECK(v.on_curve_samples == 1000);
  REQUIRE(v.annuli.size() == 8);
  for (const auto& a : v.annuli) {
    CHECK(a.complete());
    CHECK(std::hypot(a.positive->point[0], a.positive->point[1]) <= a.r_hi);
    CHECK(std::hypot(a.negative->point[0], a.negative->point[1]) >= a.r_lo);
  }
  CHECK(v.holds());
}
