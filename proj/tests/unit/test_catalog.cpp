#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pathlab/catalog.hpp"
#include "pathlab/errors.hpp"
#include "support.hpp"

using namespace pathlab;
using catalog::Catalog;
using test_support::uniform;
using test_support::ulp_distance;

namespace {

#ifdef __SIZEOF_FLOAT128__
using Wide = __float128;
#else
using Wide = long double;
#endif

// Linear search for the branch, no floor() involved.
double piecewise_oracle(double x) {
  long n = 1;
  while (x < 1.0 / static_cast<double>(n + 1)) ++n;
  const double left = 1.0 / static_cast<double>(n + 1);
  return left + 0.5 * (x - left);
}

}  // namespace

TEST_CASE("catalog lists every registered id") {
  const auto& cat = Catalog::standard();
  CHECK(cat.entry_ids().size() == 9);
  CHECK(cat.bivariate_ids() == std::vector<std::string>{"osc-curve-trap", "parabola-trap"});
  for (const auto& id : cat.curve_ids()) CHECK(cat.curve(id).id() == id);
  CHECK_THROWS_AS(cat.entry("nope"), UnknownIdError);
  CHECK_THROWS_AS(cat.evaluate("nope", 0.0), UnknownIdError);
  CHECK_THROWS_AS(cat.curve("nope"), UnknownIdError);
}

TEST_CASE("point evaluations") {
  const auto& cat = Catalog::standard();
  CHECK(cat.evaluate("min-no-flank", 0.0) == 0.0);
  CHECK(cat.evaluate2("parabola-trap", 2.0, 1.0) == -3.0);
  const double x = std::cbrt(std::numbers::pi / 2.0);
  CHECK(cat.evaluate("decay-wild-deriv", x) == doctest::Approx(std::cbrt(2.0 / std::numbers::pi)).epsilon(1e-15));
  CHECK(cat.evaluate("inverse-counterexample", 0.0) == 0.0);
}

TEST_CASE("domain checks") {
  const auto& cat = Catalog::standard();
  CHECK_THROWS_AS(cat.evaluate("inverse-counterexample", 1.0), DomainError);
  CHECK_THROWS_AS(cat.evaluate("inverse-counterexample", -1.0), DomainError);
  CHECK_THROWS_AS(cat.evaluate("onesided-osc", 1.5), DomainError);
  CHECK_NOTHROW(cat.evaluate("onesided-osc", 1.0));
}

TEST_CASE("piecewise branch matches a linear-search oracle") {
  for (int i = 0; i < 10000; ++i) {
    const double x = uniform(1e-3, 1.0);
    const double got = catalog::example1_eval(x);
    CHECK(ulp_distance(got, piecewise_oracle(x)) <= 2);
  }
  CHECK(catalog::example1_branch(0.5) == 1.0);
  CHECK(catalog::example1_branch(0.3) == 3.0);
  // exact breakpoints pick the branch whose half-open interval starts there
  for (long m = 2; m <= 1000; ++m) CHECK(catalog::example1_branch(1.0 / static_cast<double>(m)) == m - 1);
}

TEST_CASE("piecewise branch approaches the gap end from the left") {
  for (long n = 1; n <= 1000; ++n) {
    const double nd = static_cast<double>(n);
    const double eps = 1e-6 / (nd * (nd + 1.0));
    const double limit = (2.0 * nd + 1.0) / (2.0 * nd * (nd + 1.0));
    CHECK(std::fabs(catalog::example1_eval(1.0 / nd - eps) - limit) <= eps);
  }
}

TEST_CASE("gap membership") {
  CHECK(catalog::example1_gap_membership(0.26));
  CHECK_FALSE(catalog::example1_gap_membership(0.24));
  CHECK(catalog::example1_gap_membership(0.5));
  CHECK_FALSE(catalog::example1_gap_membership(0.8));
  // every value of the explicit branch lands in a half-interval
  for (int i = 0; i < 10000; ++i) CHECK(catalog::example1_gap_membership(catalog::example1_eval(uniform(1e-3, 1.0))));
}

TEST_CASE("odd entries are odd") {
  const auto check_odd = [](const catalog::CatalogEntry& e, double hi) {
    REQUIRE(e.odd_symmetric);
    for (int i = 0; i < 10000; ++i) {
      const double x = uniform(0.0, hi);
      if (x == 0.0) continue;
      CHECK(e(-x) == -e(x));
    }
  };
  const auto& cat = Catalog::standard();
  check_odd(cat.entry("inverse-counterexample"), 1.0);
  check_odd(cat.entry("torsion-osc"), 1.0);
  // loose quadrature tolerance keeps 2e4 integrals cheap; oddness does not depend on it
  check_odd(catalog::make_onesided_osc(1e-4), 1.0);
}

TEST_CASE("parabola trap along the parabola y = x^2 / 4") {
  const auto& cat = Catalog::standard();
  for (int i = 0; i <= 1000; ++i) {
    const double t = -1.0 + 2.0 * i / 1000.0;
    const Wide wt = t;
    const double expected = static_cast<double>(Wide(-3) * wt * wt * wt * wt);
    CHECK(ulp_distance(cat.evaluate2("parabola-trap", 2.0 * t, t * t), expected) <= 4);
  }
}

TEST_CASE("parabola trap restricted to lines") {
  const auto& f = Catalog::standard().bivariate("parabola-trap").eval;
  std::size_t worst = 0;
  for (int i = 0; i < 100000; ++i) {
    const double angle = uniform(0.0, 2.0 * std::numbers::pi);
    const double t = uniform(-1.0, 1.0);
    const double x = t * std::cos(angle);
    const double y = t * std::sin(angle);
    // same point, quad precision, product form of the closed-form quartic
    const Wide lx = x;
    const Wide ly = y;
    const Wide oracle = (Wide(5) * ly - lx * lx) * (ly - lx * lx);
    worst = std::max<std::size_t>(worst, ulp_distance(f(x, y), static_cast<double>(oracle)));
  }
  CHECK(worst <= 4);
}

TEST_CASE("osc curve trap signs") {
  const auto& e = Catalog::standard().bivariate("osc-curve-trap");
  CHECK(e.eval(0.0, 0.0) == 0.0);
  for (double x : {0.3, -0.2, 0.05}) {
    const double on = std::sin(1.0 / x);
    CHECK(e.eval_signed_log(x, on).sign > 0);
    CHECK(e.eval_signed_log(x, on + 0.5).sign > 0);
    CHECK(e.eval_signed_log(x, on - 0.5).sign < 0);
  }
}

TEST_CASE("inj-fail alpha is a parameter") {
  const auto e = catalog::make_inj_fail(1.0);
  CHECK(e.params.at("alpha") == 1.0);
  const double x = 0.3;
  CHECK(e(x) == doctest::Approx(x + x * x * std::sin(1.0 / (x * x))));
}

TEST_CASE("rational torsion branch is exact") {
  using catalog::Rational;
  CHECK(catalog::rational_torsion_eval(Rational(2, 3)) == Rational(8, 27));
  CHECK(catalog::rational_torsion_eval(Rational(-4, 6)) == Rational(-8, 27));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK_THROWS_AS(catalog::rational_torsion_eval(Rational(1, 3'000'000'000LL)), NumericError);
}
