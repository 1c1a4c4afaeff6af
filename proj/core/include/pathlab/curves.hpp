#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathlab/errors.hpp"
#include "pathlab/interval.hpp"

namespace pathlab::curves {

using Component = std::function<double(double)>;

/// An n-component curve on a compact parameter interval [a, b], given by
/// componentwise evaluators and their derivatives.
class ParametricCurve {
 public:
  ParametricCurve(std::string id, double a, double b, std::vector<Component> components,
                  std::vector<Component> derivatives);

  const std::string& id() const noexcept { return id_; }
  std::size_t dim() const noexcept { return components_.size(); }
  const Interval& domain() const noexcept { return domain_; }
  double a() const noexcept { return domain_.lo(); }
  double b() const noexcept { return domain_.hi(); }

  double component(std::size_t i, double t) const { return components_[i](t); }
  double component_derivative(std::size_t i, double t) const { return derivatives_[i](t); }
  std::vector<double> point(double t) const;
  std::vector<double> velocity(double t) const;

  /// First sampled parameter where the velocity vanishes (sum of squares <= floor).
  std::optional<double> first_singular_point(std::size_t grid, double floor = 0.0) const;

 private:
  std::string id_;
  Interval domain_;
  std::vector<Component> components_;
  std::vector<Component> derivatives_;
};

double max_norm_distance(std::span<const double> p, std::span<const double> q);

// ---------------------------------------------------------------------------

/// gamma(t) and eta(s) differ by more than the residual tolerance somewhere.
class TracesDifferError : public std::runtime_error {
 public:
  TracesDifferError(const std::string& what, double t) : std::runtime_error(what), t_(t) {}
  double parameter() const noexcept { return t_; }

 private:
  double t_;
};

/// The root finder could not bracket eta_j(s) = gamma_j(t) anywhere.
class GeometryError : public NumericError {
 public:
  using NumericError::NumericError;
};

struct ReparamRow {
  double t = 0.0;
  double s = 0.0;
  double phi_prime = 0.0;
  double residual = 0.0;
  std::size_t component = 0;  // coordinate used to solve for s
  bool target_singular = false;  // |eta_j'(s)| vanished; phi_prime from the table
};

/// Sampled graph of the parameter transformation phi = eta^{-1} o gamma.
struct ReparamTable {
  std::string source_id;
  std::string target_id;
  bool orientation_preserving = true;
  std::vector<ReparamRow> rows;
  /// Rows where |phi'| fell below the floor or phi' changed sign.
  std::vector<std::size_t> violations;

  double max_residual() const;
};

struct ReparamOptions {
  double tol = 1e-8;          // residual bound, max-norm
  double phi_floor = 1e-12;   // |phi'| below this is a violation
  bool injectivity_check = true;
  std::size_t injectivity_grid = 2000;
  double injectivity_separation = 0.05;  // fraction of the parameter length
};

/// Solve gamma(t) = eta(phi(t)) on `grid` equally spaced t in [a, b].
ReparamTable reparametrize(const ParametricCurve& gamma, const ParametricCurve& eta,
                           std::size_t grid, const ReparamOptions& options = {});

/// Same, at caller-supplied strictly monotone parameters (must start at an endpoint).
ReparamTable reparametrize_at(const ParametricCurve& gamma, const ParametricCurve& eta,
                              std::span<const double> ts, const ReparamOptions& options = {});

struct CoincidencePair {
  double t1 = 0.0;
  double t2 = 0.0;
  double distance = 0.0;  // max-norm of gamma(t1) - gamma(t2)
};

/// Parameter pairs at least `separation` apart mapped to (numerically) the same point.
std::vector<CoincidencePair> injectivity_probe(const ParametricCurve& curve, std::size_t grid,
                                               double separation, double tol = 1e-9,
                                               std::size_t max_pairs = 100000);

struct Claim1Verdict {
  std::size_t rows_checked = 0;
  std::vector<std::size_t> violations;
  bool holds() const noexcept { return violations.empty(); }
};

/// Wherever the solving component of eta has |eta_j'(s)| > threshold, the same
/// component of gamma must have nonzero derivative.
Claim1Verdict claim1_check(const ParametricCurve& gamma, const ParametricCurve& eta,
                           const ReparamTable& table, double threshold = 1e-8);

struct ArclengthResult {
  double lower_bound = 0.0;           // polygon length at the requested grid
  bool diverging = false;
  std::vector<double> refinements;    // lengths at grid, 2 grid, 4 grid, ...
};

double polygon_length(const ParametricCurve& curve, std::size_t grid);

ArclengthResult arclength(const ParametricCurve& curve, std::size_t grid,
                          std::size_t doublings = 3, double growth_factor = 1.5);

}  // namespace pathlab::curves
