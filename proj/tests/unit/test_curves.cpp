#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pathlab/catalog.hpp"
#include "pathlab/curves.hpp"
#include "pathlab/errors.hpp"

using namespace pathlab;
using curves::ParametricCurve;
using std::numbers::pi;

namespace {

const ParametricCurve& curve(std::string_view id) { return catalog::Catalog::standard().curve(id); }

}  // namespace

TEST_CASE("constructor validation") {
  const curves::Component x = [](double t) { return t; };
  CHECK_THROWS_AS(ParametricCurve("bad", 1.0, 0.0, {x}, {x}), PreconditionError);
  CHECK_THROWS_AS(ParametricCurve("bad", 0.0, 1.0, {x, x}, {x}), PreconditionError);
  CHECK_THROWS_AS(ParametricCurve("bad", 0.0, 1.0, {}, {}), PreconditionError);
  const auto& c = curve("quarter-circle");
  CHECK(c.dim() == 2);
  CHECK(c.point(0.0) == std::vector<double>{1.0, 0.0});
}

TEST_CASE("quarter circle to its squared-parameter copy") {
  const auto table = curves::reparametrize(curve("quarter-circle"), curve("quarter-circle-sq"), 1000);
  REQUIRE(table.rows.size() == 1000);
  CHECK(table.orientation_preserving);
  CHECK(table.violations.empty());
  CHECK(table.max_residual() <= 1e-8);
  for (const auto& row : table.rows) {
    CHECK(std::fabs(row.s - std::sqrt(row.t)) <= 1e-8);
    CHECK(row.phi_prime > 0.0);
    if (row.t > 0.0) CHECK(row.phi_prime == doctest::Approx(0.5 / std::sqrt(row.t)).epsilon(1e-6));
  }
  CHECK(curves::claim1_check(curve("quarter-circle"), curve("quarter-circle-sq"), table).holds());
}

TEST_CASE("derivative column agrees with differences of the s column") {
  const auto table = curves::reparametrize(curve("quarter-circle"), curve("quarter-circle-sq"), 1000);
  const auto& rows = table.rows;
  for (std::size_t i = 64; i + 1 < rows.size(); ++i) {
    const double fd = (rows[i + 1].s - rows[i - 1].s) / (rows[i + 1].t - rows[i - 1].t);
    CAPTURE(i);
    CHECK(fd == doctest::Approx(rows[i].phi_prime).epsilon(1e-4));
  }
}

TEST_CASE("reparametrization is symmetric") {
  const auto& gamma = curve("quarter-circle");
  const auto& eta = curve("quarter-circle-sq");
  const auto forward = curves::reparametrize(gamma, eta, 500);
  std::vector<double> ss;
  for (const auto& row : forward.rows) ss.push_back(row.s);
  const auto back = curves::reparametrize_at(eta, gamma, ss);
  REQUIRE(back.rows.size() == forward.rows.size());
  for (std::size_t i = 0; i < back.rows.size(); ++i) CHECK(std::fabs(back.rows[i].s - forward.rows[i].t) <= 1e-7);
  // quarter-circle-sq has zero velocity at s = 0, so the inverse map starts with phi' = 0
  CHECK(back.violations == std::vector<std::size_t>{0});
}

TEST_CASE("reversed orientation") {
  const auto& seg = curve("segment");
  const ParametricCurve back("segment-back", 0.0, 1.0, {[](double t) { return 1.0 - t; }, [](double t) { return 1.0 - t; }},
                             {[](double) { return -1.0; }, [](double) { return -1.0; }});
  const auto table = curves::reparametrize(seg, back, 101);
  CHECK_FALSE(table.orientation_preserving);
  for (const auto& row : table.rows) {
    CHECK(row.s == doctest::Approx(1.0 - row.t).scale(1.0).epsilon(1e-12));
    CHECK(row.phi_prime == doctest::Approx(-1.0));
  }
}

TEST_CASE("different traces are rejected") {
  CHECK_THROWS_AS(curves::reparametrize(curve("segment"), curve("quarter-circle"), 50), curves::TracesDifferError);
}

TEST_CASE("non-injective curves are rejected") {
  const auto pairs = curves::injectivity_probe(curve("circle-3pi"), 2000, 0.05 * 3.0 * pi);
  REQUIRE_FALSE(pairs.empty());
  for (const auto& p : pairs) {
    CHECK(p.distance <= 1e-9);
    CHECK(std::fabs(std::fabs(p.t2 - p.t1) - 2.0 * pi) <= 1e-6);
  }
  CHECK_THROWS(curves::reparametrize(curve("circle-2pi"), curve("circle-3pi"), 100));
}

TEST_CASE("figure eight crosses itself at the origin") {
  const auto pairs = curves::injectivity_probe(curve("gerono"), 2000, 0.05 * 2.0 * pi);
  bool found = false;
  for (const auto& p : pairs) found = found || (std::fabs(p.t1) < 1e-6 && std::fabs(p.t2 - pi) < 1e-6);
  CHECK(found);
}

TEST_CASE("singular points") {
  const ParametricCurve cusp("cusp", -1.0, 1.0, {[](double t) { return t * t * t; }, [](double t) { return t * t; }},
                             {[](double t) { return 3.0 * t * t; }, [](double t) { return 2.0 * t; }});
  const auto s = cusp.first_singular_point(201);
  REQUIRE(s);
  CHECK(*s == doctest::Approx(0.0).scale(1.0));
  CHECK_FALSE(curve("quarter-circle").first_singular_point(201));
}

TEST_CASE("polygon length of a circle matches the chord formula") {
  for (std::size_t n : {5, 100, 10001}) {
    const double chords = static_cast<double>(n - 1);
    const double oracle = chords * 2.0 * std::sin(pi / chords);
    CHECK(curves::polygon_length(curve("circle-2pi"), n) == doctest::Approx(oracle).epsilon(1e-12));
  }
  CHECK(curves::polygon_length(curve("segment"), 7) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("arclength converges on rectifiable curves") {
  const auto c = curves::arclength(curve("circle-2pi"), 10000);
  CHECK(std::fabs(c.lower_bound - 2.0 * pi) <= 1e-4);
  CHECK_FALSE(c.diverging);
}

TEST_CASE("refinement never shortens a polygon") {
  const auto r = curves::arclength(curve("graph-x2sin"), 10000, 4);
  REQUIRE(r.refinements.size() == 5);
  for (std::size_t i = 1; i < r.refinements.size(); ++i) CHECK(r.refinements[i] >= r.refinements[i - 1]);
}
