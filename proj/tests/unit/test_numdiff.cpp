#include <cmath>
#include <limits>
#include <map>

#include "doctest.h"
#include "pathlab/catalog.hpp"
#include "pathlab/errors.hpp"
#include "pathlab/numdiff.hpp"
#include "support.hpp"

using namespace pathlab;
using catalog::Catalog;
using test_support::uniform;

namespace {

struct Range {
  double lo;
  double hi;
  bool mirror;  // also sample -x
};

// Where the seventh derivative is small enough for h = 1e-6 Richardson.
const std::map<std::string, Range> kAdmissible{
    {"inj-fail", {0.1, 1.0, true}},
    {"inj-fail-caption", {0.05, 1.0, true}},
    {"min-no-flank", {0.01, 1.0, true}},
    {"torsion-osc", {0.01, 1.0, true}},
    {"improper-unbounded", {0.0, 3.0, true}},
    {"decay-wild-deriv", {0.5, 10.0, true}},
};

// Derivatives defined through a quadrature are checked separately.
bool quadrature_backed(const std::string& id) { return id.rfind("onesided", 0) == 0; }

}  // namespace

TEST_CASE("Richardson estimate agrees with the analytic derivative") {
  const auto& cat = Catalog::standard();
  for (const auto& id : cat.entry_ids()) {
    const auto& e = cat.entry(id);
    if (!e.analytic_derivative || quadrature_backed(id)) continue;
    CAPTURE(id);
    const auto it = kAdmissible.find(id);
    REQUIRE(it != kAdmissible.end());
    const auto [lo, hi, mirror] = it->second;
    for (int i = 0; i < 1000; ++i) {
      double x = uniform(lo, hi);
      if (mirror && i % 2 == 1) x = -x;
      const double exact = (*e.analytic_derivative)(x);
      const double est = numdiff::derivative(e, x).value;
      const double tol = std::max(1e-6, 1e3 * std::numeric_limits<double>::epsilon() * std::fabs(exact));
      CAPTURE(x);
      CHECK(std::fabs(est - exact) <= tol);
    }
  }
}

TEST_CASE("quadrature-backed derivative matches its integrand") {
  // difference noise is about tol / h = 1e-5
  const auto e = catalog::make_onesided_osc(1e-11);
  for (double x : {0.053, 0.031, -0.04}) {
    CAPTURE(x);
    CHECK(std::fabs(numdiff::derivative(e, x).value - (*e.analytic_derivative)(x)) <= 1e-4);
  }
}

TEST_CASE("one-sided scheme near a closed endpoint") {
  const auto& e = Catalog::standard().entry("onesided-osc");
  const auto est = numdiff::derivative(e, 1.0);
  CHECK(est.value == doctest::Approx(std::pow(std::fabs(std::cos(1.0)), 1.0)).epsilon(1e-4));
  CHECK_THROWS_AS(numdiff::derivative(e, 1.0, numdiff::Scheme::Central), BoundaryError);
}

TEST_CASE("second derivative of a cubic") {
  const auto e = catalog::make_entry("cubic", Interval::real_line(), [](double x) { return x * x * x; });
  for (double x : {-2.0, 0.0, 0.5, 3.0}) CHECK(numdiff::second_derivative(e, x).value == doctest::Approx(6.0 * x).epsilon(1e-6).scale(1.0));
}

TEST_CASE("quotient bounds hold exhaustively for small n") {
  for (long n = 1; n <= 100; ++n) {
    const double nd = static_cast<double>(n);
    const double width = 1.0 / (nd * (nd + 1.0));
    for (int j = 0; j < 200; ++j) {
      const double tau = width * j / 200.0;
      const auto b = numdiff::difference_quotient_bounds(n, tau);
      CHECK(b.lower <= b.q);
      CHECK(b.q <= b.upper);
      CHECK(b.lower == doctest::Approx(nd / (nd + 1.0)));
      // the quotient of the explicit branch itself
      const double x = 1.0 / (nd + 1.0) + tau;
      CHECK(b.q == doctest::Approx(catalog::example1_eval(x) / x).epsilon(1e-12));
    }
  }
  const auto b = numdiff::difference_quotient_bounds(10, 1.0 / 220.0);
  CHECK(b.q == doctest::Approx(41.0 / 42.0).epsilon(1e-15));
  CHECK_THROWS_AS(numdiff::difference_quotient_bounds(0, 0.0), PreconditionError);
  CHECK_THROWS_AS(numdiff::difference_quotient_bounds(10, 1.0 / 110.0), PreconditionError);
}

TEST_CASE("difference quotients along 1/(n+1)") {
  const auto& e = Catalog::standard().entry("inverse-counterexample");
  std::vector<double> xs;
  for (int n = 1; n <= 50; ++n) xs.push_back(1.0 / (n + 1.0));
  for (double q : numdiff::difference_quotients(e, 0.0, xs)) CHECK(q == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(numdiff::derivative(e, 0.0).value == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("sign scan finds both signs and is deterministic") {
  const auto& e = Catalog::standard().entry("inj-fail");
  numdiff::ScanOptions opts;
  opts.threshold = 100.0;
  const auto iv = Interval::open(1e-4, 1e-2);
  const auto a = numdiff::sign_change_scan(e, iv, 100000, opts);
  const auto b = numdiff::sign_change_scan(e, iv, 100000, opts);
  REQUIRE(a.both_signs());
  CHECK(a.positive_witness->value > 100.0);
  CHECK(a.negative_witness->value < -100.0);
  CHECK(a.positive_witness->x == b.positive_witness->x);
  CHECK(a.negative_witness->x == b.negative_witness->x);
  CHECK(a.sup_abs_seen == b.sup_abs_seen);
  CHECK(a.samples == 100000);
  CHECK_THROWS_AS(numdiff::sign_change_scan(e, Interval::open(0.0, 1e-2), 100, opts), PreconditionError);
}

TEST_CASE("inverse derivative on a monotone cubic") {
  const auto e = catalog::make_entry("x3+x", Interval::real_line(), [](double x) { return x * x * x + x; },
                                     [](double x) { return 3.0 * x * x + 1.0; });
  for (int i = 0; i <= 20; ++i) {
    const double x0 = -1.5 + 0.15 * i;
    const auto r = numdiff::inverse_derivative_check(e, Interval::closed(-2.0, 2.0), x0);
    const double oracle = 1.0 / (3.0 * x0 * x0 + 1.0);
    CAPTURE(x0);
    CHECK(std::fabs(r.via_formula - oracle) <= 1e-12);
    CHECK(std::fabs(r.direct - r.via_formula) <= 1e-5 * (1.0 + std::fabs(r.via_formula)));
  }
  const auto cube = catalog::make_entry("x3", Interval::real_line(), [](double x) { return x * x * x; },
                                        [](double x) { return 3.0 * x * x; });
  CHECK_THROWS_AS(numdiff::inverse_derivative_check(cube, Interval::closed(-1.0, 1.0), 0.0), PreconditionError);
  const auto bump = catalog::make_entry("x2", Interval::real_line(), [](double x) { return x * x; });
  CHECK_THROWS_AS(numdiff::inverse_derivative_check(bump, Interval::closed(-1.0, 1.0), 0.5), PreconditionError);
}

TEST_CASE("tangent side test") {
  const auto& cat = Catalog::standard();
  const auto iv = Interval::closed(-0.1, 0.1);
  CHECK(numdiff::tangent_side_test(cat.entry("torsion-osc"), 0.0, iv).torsion_point);
  const auto cube = catalog::make_entry("x3", Interval::real_line(), [](double x) { return x * x * x; });
  CHECK(numdiff::tangent_side_test(cube, 0.0, iv).torsion_point);
  const auto square = catalog::make_entry("x2", Interval::real_line(), [](double x) { return x * x; });
  const auto v = numdiff::tangent_side_test(square, 0.0, iv);
  CHECK_FALSE(v.torsion_point);
  CHECK(v.left_above);
  CHECK(v.right_above);
}

TEST_CASE("convexity scan") {
  const auto& cat = Catalog::standard();
  for (const auto& id : {"torsion-osc", "min-no-flank"}) {
    CAPTURE(id);
    CHECK(numdiff::convexity_scan(cat.entry(id), Interval::open(1e-3, 1e-2), 100000).neither_convex_nor_concave());
  }
  const auto square = catalog::make_entry("x2", Interval::real_line(), [](double x) { return x * x; });
  const auto v = numdiff::convexity_scan(square, Interval::closed(-1.0, 1.0), 1000);
  CHECK(v.positive);
  CHECK_FALSE(v.negative);
}
