#include "pathlab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "pathlab/errors.hpp"
#include "pathlab/functions.hpp"

namespace pathlab::quadrature {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxSegments = 200000;

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  int depth;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const Integrand& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  const double value = kronrod * half;
  const double error = std::fabs((kronrod - gauss) * half);
  return {a, b, value, error, depth};
}

bool splittable(const Segment& s, int max_depth) {
  if (s.depth >= max_depth) return false;
  const double scale = std::max(std::fabs(s.a), std::fabs(s.b));
  return (s.b - s.a) > 1e3 * kEps * scale;
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, double tol, int max_depth) {
  if (!(tol > 0.0)) throw PreconditionError("integrate requires tol > 0");
  QuadratureResult out;
  if (a == b) return out;
  const double sign = a < b ? 1.0 : -1.0;
  if (a > b) std::swap(a, b);

  std::priority_queue<Segment> open;     // splittable, worst first
  std::vector<Segment> frozen;           // depth cap or roundoff floor
  double value = 0.0;
  double error = 0.0;
  auto admit = [&](const Segment& s) {
    value += s.value;
    error += s.error;
    out.evaluations += 15;
    if (splittable(s, max_depth)) {
      open.push(s);
    } else {
      frozen.push_back(s);
    }
  };
  admit(gauss_kronrod(f, a, b, 0));

  std::size_t splits = 0;
  while (error > tol && !open.empty() && splits < kMaxSegments) {
    const Segment worst = open.top();
    open.pop();
    value -= worst.value;
    error -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    admit(gauss_kronrod(f, worst.a, mid, worst.depth + 1));
    admit(gauss_kronrod(f, mid, worst.b, worst.depth + 1));
    ++splits;
  }

  // Re-add from scratch to shed the drift of the running sums.
  double v = 0.0;
  double e = 0.0;
  for (auto q = open; !q.empty(); q.pop()) {
    v += q.top().value;
    e += q.top().error;
  }
  for (const auto& s : frozen) {
    v += s.value;
    e += s.error;
  }
  out.value = sign * v;
  out.abs_error_estimate = e;
  out.converged = std::isfinite(v) && e <= tol;
  return out;
}

// ---------------------------------------------------------------------------

double tail_remainder_estimate(const CosinePowerTail& tail, double first_period) {
  const double p = tail.exponent_power;
  const double s = 0.5 * p + tail.weight_power;
  const double K = first_period;
  const double scale = std::sqrt(2.0 * kPi) * std::pow(kPi, -s);
  const double pp = std::pow(kPi, p);
  // Peak at m pi ~ scale m^-s (1 - 1/(4 (m pi)^p)); half of peak K belongs to
  // the tail, peaks m > K are summed by the midpoint rule.
  const double half_peak = 0.5 * std::pow(K, -s) * (1.0 - 0.25 / (pp * std::pow(K, p)));
  const double rest = std::pow(K + 0.5, 1.0 - s) / (s - 1.0) -
                      0.25 / pp * std::pow(K + 0.5, 1.0 - s - p) / (s + p - 1.0);
  return scale * (half_peak + rest);
}

QuadratureResult oscillatory_tail(const CosinePowerTail& tail, double u_start,
                                  const TailOptions& options) {
  if (!(u_start > 0.0)) throw PreconditionError("oscillatory_tail requires u_start > 0");
  const Integrand f = [&tail](double u) {
    return fn::cosine_power(u, tail.exponent_power, tail.weight_power);
  };
  const double period_tol = options.tol * 1e-4;
  QuadratureResult out;
  auto add = [&](const QuadratureResult& r) {
    out.value += r.value;
    out.abs_error_estimate += r.abs_error_estimate;
    out.evaluations += r.evaluations;
    out.converged = out.converged && r.converged;
  };

  double k = std::floor(u_start / kPi) + 1.0;
  if (u_start < k * kPi) add(integrate(f, u_start, k * kPi, period_tol));

  std::size_t periods = 0;
  for (;;) {
    const auto r = integrate(f, k * kPi, (k + 1.0) * kPi, period_tol);
    add(r);
    k += 1.0;
    if (std::fabs(r.value) < options.tol / 10.0) break;
    if (++periods >= options.max_periods) {
      out.converged = false;
      break;
    }
  }

  const double remainder = tail_remainder_estimate(tail, k);
  out.value += remainder;
  out.abs_error_estimate += remainder * std::pow(k * kPi, -std::min(tail.exponent_power, 1.0));
  out.converged = out.converged && out.abs_error_estimate <= options.tol;
  return out;
}

namespace {
QuadratureResult odd_tail_integral(const CosinePowerTail& tail, double x, double tol) {
  if (x == 0.0) return {};
  if (!(std::fabs(x) <= 1.0)) throw DomainError("one-sided integral requires |x| <= 1");
  auto r = oscillatory_tail(tail, 1.0 / std::fabs(x), {tol});
  if (x < 0.0) r.value = -r.value;
  return r;
}
}  // namespace

QuadratureResult onesided_osc_F(double x, double tol) {
  return odd_tail_integral(kOnesidedTail, x, tol);
}

QuadratureResult onesided_osc_unbounded_F(double x, double tol) {
  return odd_tail_integral(kOnesidedUnboundedTail, x, tol);
}

// ---------------------------------------------------------------------------

double tail_alpha() { return 0.5 * (1.0 + std::exp(-kPi * kPi * kPi / 4.0)); }

double tail_power_term(double k) {
  const double r = std::sqrt(k);
  return std::pow(1.0 - kPi * kPi / (4.0 * r), r * kPi);
}

long tail_threshold_N0(long scan_limit) {
  const double alpha = tail_alpha();
  if (!(std::exp(-kPi * kPi * kPi / 4.0) < alpha))
    throw NumericError("limit of the power term is not below alpha");
  // Beyond scan_limit the term increases monotonically to its limit < alpha.
  double next = tail_power_term(static_cast<double>(scan_limit));
  for (long k = scan_limit - 1; k >= 16; --k) {
    const double term = tail_power_term(static_cast<double>(k));
    if (!(term < next)) throw NumericError("power term is not increasing on the scan range");
    next = term;
  }
  long n0 = scan_limit + 1;
  for (long k = scan_limit; k >= 16; --k) {
    if (tail_power_term(static_cast<double>(k)) > alpha) break;
    n0 = k;
  }
  return n0;
}

double tail_analytic_bound(long N) {
  const double n = static_cast<double>(N);
  const double alpha = tail_alpha();
  return 8.0 / (5.0 * kPi) * std::pow(n, -1.25) +
         2.0 * std::pow(alpha, std::sqrt(n)) / (kPi * std::log(1.0 / alpha));
}

TailBoundCheck tail_bound(long N, double tol) {
  const long n0 = tail_threshold_N0(100000);
  if (N < n0) throw PreconditionError("tail_bound requires N >= N0 = " + std::to_string(n0));
  TailBoundCheck out;
  out.N = N;
  out.alpha = tail_alpha();
  out.analytic_bound = tail_analytic_bound(N);
  out.numeric_value = onesided_osc_F(1.0 / ((static_cast<double>(N) + 1.0) * kPi), tol).value;
  return out;
}

PeriodBounds period_bounds(long k, double tol) {
  if (k < 1) throw PreconditionError("period_bounds requires k >= 1");
  const double kd = static_cast<double>(k);
  const double quarter = std::pow(kd, -0.25);
  PeriodBounds p;
  p.k = k;
  p.a = kd * kPi;
  p.b = (kd + quarter) * kPi;
  p.c = (kd + 1.0 - quarter) * kPi;
  p.a_next = (kd + 1.0) * kPi;
  const Integrand f = [](double u) { return fn::cosine_power(u, 1.0, 2.0); };
  p.head = integrate(f, p.a, p.b, tol).value;
  p.middle = p.c > p.b ? integrate(f, p.b, p.c, tol).value : 0.0;
  p.end = integrate(f, p.c, p.a_next, tol).value;
  p.head_bound = 1.0 / (kPi * std::pow(kd, 2.25));
  p.end_bound = p.head_bound;
  p.middle_bound =
      1.0 / (kPi * kd * kd) * std::pow(1.0 - kPi * kPi / (4.0 * std::sqrt(kd)), kd * kPi);
  return p;
}

CosineEstimate cosine_estimate(std::size_t grid) {
  CosineEstimate out;
  out.worst_margin = std::numeric_limits<double>::infinity();
  const std::size_t n = std::max<std::size_t>(grid, 2);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = 0.5 * kPi * static_cast<double>(i) / static_cast<double>(n - 1);
    const double margin = (1.0 - 0.25 * y * y) - std::cos(y);
    if (margin < out.worst_margin) {
      out.worst_margin = margin;
      out.worst_at = y;
    }
  }
  out.holds = out.worst_margin >= 0.0;
  return out;
}

// ---------------------------------------------------------------------------

double xsinx3_segment(std::size_t k, double tol) {
  const double a = static_cast<double>(k) * kPi;
  const auto r = integrate([](double y) { return std::sin(y) / (3.0 * std::cbrt(y)); }, a,
                           a + kPi, tol);
  return r.value;
}

ImproperConvergence improper_convergence_xsinx3(double tol, std::size_t check_upto,
                                                std::size_t max_segments) {
  if (!(tol > 0.0)) throw PreconditionError("improper_convergence requires tol > 0");
  constexpr int kMaxLevel = 12;
  ImproperConvergence out;
  std::size_t target = std::min(max_segments, check_upto + 2 * kMaxLevel + 2);

  for (;;) {
    while (out.segments.size() < target) out.segments.push_back(xsinx3_segment(out.segments.size()));
    const auto& S = out.segments;
    const std::size_t n = S.size();

    out.magnitudes_decreasing = true;
    for (std::size_t k = 0; k + 1 < n && k < check_upto; ++k) {
      if (!(std::fabs(S[k + 1]) < std::fabs(S[k]))) {
        out.magnitudes_decreasing = false;
        break;
      }
    }
    bool alternating = true;
    for (std::size_t k = 0; k < n; ++k) {
      if ((S[k] > 0.0) != (k % 2 == 0)) alternating = false;
    }

    // Levels of pairwise averaging; each level is again an alternating series.
    std::vector<double> T = S;
    double offset = 0.0;
    bool found = false;
    for (int m = 0; m <= kMaxLevel && T.size() >= 4; ++m) {
      bool valid = true;
      for (std::size_t k = T.size() / 2; k + 1 < T.size(); ++k) {
        const bool flips = (T[k] > 0.0) != (T[k + 1] > 0.0);
        if (!flips || !(std::fabs(T[k + 1]) < std::fabs(T[k]))) {
          valid = false;
          break;
        }
      }
      if (!valid) break;
      const double spread = std::fabs(T.back());
      if (spread < tol) {
        double sum = offset;
        for (const double t : T) sum += t;
        out.acceleration_level = m;
        out.spread = spread;
        out.limit_estimate = sum;
        found = true;
        break;
      }
      offset += 0.5 * T.front();
      std::vector<double> next(T.size() - 1);
      for (std::size_t k = 0; k + 1 < T.size(); ++k) next[k] = 0.5 * (T[k] + T[k + 1]);
      T = std::move(next);
    }

    if (found || n >= max_segments) {
      out.cauchy_ok = found && alternating && out.magnitudes_decreasing;
      if (!found) out.spread = std::fabs(S.back());
      break;
    }
    target = std::min(max_segments, 4 * n);
  }

  out.partial_values.reserve(out.segments.size());
  double running = 0.0;
  for (const double s : out.segments) {
    running += s;
    out.partial_values.push_back(running);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {
template <typename Eval, typename Peaks>
ProbePoint probe_max(double lo, double hi, std::size_t grid, Eval&& eval, const Peaks& peaks) {
  ProbePoint best;
  best.R = hi;
  auto consider = [&](double x) {
    const double v = std::fabs(eval(x));
    if (v > best.max_abs) {
      best.max_abs = v;
      best.argmax = x;
    }
  };
  const std::size_t n = std::max<std::size_t>(grid, 2);
  for (std::size_t i = 0; i < n; ++i) {
    consider(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  if (peaks) {
    for (const double x : peaks(lo, hi)) consider(x);
  }
  return best;
}
}  // namespace

ProbePoint max_abs_on(const catalog::CatalogEntry& entry, double lo, double hi,
                      std::size_t grid) {
  return probe_max(lo, hi, grid, [&](double x) { return entry(x); }, entry.value_peaks);
}

std::vector<ProbePoint> unboundedness_probe(const catalog::CatalogEntry& entry,
                                            std::span<const double> R_list, std::size_t grid) {
  std::vector<ProbePoint> out;
  out.reserve(R_list.size());
  for (const double R : R_list) out.push_back(max_abs_on(entry, 0.0, R, grid));
  return out;
}

ProbePoint max_abs_slope_on(const catalog::CatalogEntry& entry, double lo, double hi,
                            std::size_t grid) {
  if (!entry.analytic_derivative)
    throw PreconditionError(entry.id + " has no analytic derivative to probe");
  return probe_max(lo, hi, grid, [&](double x) { return (*entry.analytic_derivative)(x); },
                   entry.slope_peaks);
}

}  // namespace pathlab::quadrature
