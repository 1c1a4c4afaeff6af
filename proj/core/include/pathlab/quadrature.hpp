#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "pathlab/catalog.hpp"
#include "pathlab/interval.hpp"

namespace pathlab::quadrature {

using Integrand = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

inline constexpr int kMaxDepth = 60;

/// Globally adaptive Gauss-Kronrod (7/15) integration to an absolute
/// tolerance. Intervals are bisected worst-first; an interval at depth
/// `max_depth` is never split, and if the target is then out of reach the
/// result is returned with converged = false.
QuadratureResult integrate(const Integrand& f, double a, double b, double tol,
                           int max_depth = kMaxDepth);

inline QuadratureResult integrate(const Integrand& f, const Interval& interval, double tol,
                                  int max_depth = kMaxDepth) {
  return integrate(f, interval.lo(), interval.hi(), tol, max_depth);
}

// ---------------------------------------------------------------------------
// Oscillatory tails  int_{u0}^{inf} |cos u|^(u^p) u^(-q) du

struct CosinePowerTail {
  double exponent_power;  // p
  double weight_power;    // q
};

/// int_0^x |cos(1/t)|^(1/|t|) dt after u = 1/t.
inline constexpr CosinePowerTail kOnesidedTail{1.0, 2.0};
/// int_0^x |t|^(-1/2) |cos(1/t)|^(1/t^2) dt after u = 1/t.
inline constexpr CosinePowerTail kOnesidedUnboundedTail{2.0, 1.5};

struct TailOptions {
  double tol = 1e-9;
  std::size_t max_periods = 10'000'000;
};

/// Sums the integral period by period over [k pi, (k+1) pi] until one
/// period contributes less than tol/10, then adds the Laplace estimate of
/// the remaining peaks (each peak near m pi is ~ sqrt(2 pi) (m pi)^-(p/2+q)).
QuadratureResult oscillatory_tail(const CosinePowerTail& tail, double u_start,
                                  const TailOptions& options = {});

/// Laplace/Euler-Maclaurin estimate of the periods k >= first_period.
double tail_remainder_estimate(const CosinePowerTail& tail, double first_period);

/// F(x) = int_0^x |cos(1/t)|^(1/|t|) dt, odd in x. Requires 0 < |x| <= 1
/// (x = 0 returns an exact zero).
QuadratureResult onesided_osc_F(double x, double tol = 1e-9);

/// int_0^x |t|^(-1/2) |cos(1/t)|^(1/t^2) dt, odd in x, 0 < |x| <= 1.
QuadratureResult onesided_osc_unbounded_F(double x, double tol = 1e-9);

// ---------------------------------------------------------------------------
// The tail-bound chain for the one-sided example.

/// (1 + e^{-pi^3/4}) / 2
double tail_alpha();

/// (1 - pi^2/(4 sqrt k))^(sqrt(k) pi), the quantity compared with alpha.
double tail_power_term(double k);

/// Smallest integer N0 >= 16 with tail_power_term(k) <= alpha for all
/// k >= N0. Checked exhaustively up to `scan_limit`, and beyond it by
/// monotone growth of the term towards its limit e^{-pi^3/4} < alpha.
long tail_threshold_N0(long scan_limit = 1'000'000);

/// 8/(5 pi) N^(-5/4) + 2 alpha^sqrt(N) / (pi log(1/alpha))
double tail_analytic_bound(long N);

struct TailBoundCheck {
  long N = 0;
  double numeric_value = 0.0;
  double analytic_bound = 0.0;
  double alpha = 0.0;
  bool holds() const noexcept { return numeric_value <= analytic_bound; }
};

/// numeric int_0^{1/((N+1) pi)} against the analytic bound. N < N0 throws.
TailBoundCheck tail_bound(long N, double tol = 1e-9);

/// Per-period pieces [a_k, b_k], [b_k, c_k], [c_k, a_{k+1}] of
/// int |cos u|^u / u^2 with a_k = k pi, b_k = (k + k^-1/4) pi,
/// c_k = (k + 1 - k^-1/4) pi, and their bounds.
struct PeriodBounds {
  long k = 0;
  double a = 0.0, b = 0.0, c = 0.0, a_next = 0.0;
  double head = 0.0, middle = 0.0, end = 0.0;
  double head_bound = 0.0, middle_bound = 0.0, end_bound = 0.0;
  bool ordered() const noexcept { return a <= b && b <= c && c <= a_next; }
  bool holds() const noexcept {
    return ordered() && head <= head_bound && middle <= middle_bound && end <= end_bound;
  }
};

PeriodBounds period_bounds(long k, double tol = 1e-13);

struct CosineEstimate {
  bool holds = true;
  double worst_margin = 0.0;  // min over the grid of (1 - y^2/4) - cos y
  double worst_at = 0.0;
};

/// cos y <= 1 - y^2/4 on an equally spaced grid over [0, pi/2].
CosineEstimate cosine_estimate(std::size_t grid);

// ---------------------------------------------------------------------------
// int_0^R x sin(x^3) dx = int_0^{R^3} sin(y) / (3 y^{1/3}) dy

struct ImproperConvergence {
  bool cauchy_ok = false;
  bool magnitudes_decreasing = false;   // over k <= check_upto
  std::vector<double> segments;         // int over [k pi, (k+1) pi]
  std::vector<double> partial_values;   // P_K = sum_{k<K} segments
  int acceleration_level = 0;           // pairwise-averaging depth used
  double spread = 0.0;                  // |E_{K+1} - E_K| at that level
  double limit_estimate = 0.0;
};

/// Segment the substituted integral at the zeros y = k pi and test the
/// alternating-series Cauchy criterion. Repeated pairwise averaging of the
/// partial sums is applied when its terms still alternate and decrease.
ImproperConvergence improper_convergence_xsinx3(double tol, std::size_t check_upto = 1000,
                                                std::size_t max_segments = 1'000'000);

/// One segment int_{k pi}^{(k+1) pi} sin y / (3 y^{1/3}) dy.
double xsinx3_segment(std::size_t k, double tol = 1e-14);

struct ProbePoint {
  double R = 0.0;
  double max_abs = 0.0;
  double argmax = 0.0;
};

/// max |f| on [lo, hi] over an equally spaced grid plus the entry's value peaks.
ProbePoint max_abs_on(const catalog::CatalogEntry& entry, double lo, double hi,
                      std::size_t grid);

/// max |f| on [0, R] for each R.
std::vector<ProbePoint> unboundedness_probe(const catalog::CatalogEntry& entry,
                                            std::span<const double> R_list,
                                            std::size_t grid = 1'000'000);

/// max |f'| on [lo, hi] (analytic derivative required) over a grid plus slope peaks.
ProbePoint max_abs_slope_on(const catalog::CatalogEntry& entry, double lo, double hi,
                            std::size_t grid);

}  // namespace pathlab::quadrature
