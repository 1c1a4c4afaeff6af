#include "pathlab/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "pathlab/roots.hpp"

namespace pathlab::curves {

ParametricCurve::ParametricCurve(std::string id, double a, double b,
                                 std::vector<Component> components,
                                 std::vector<Component> derivatives)
    : id_(std::move(id)),
      domain_(Interval::closed(a, b)),
      components_(std::move(components)),
      derivatives_(std::move(derivatives)) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw PreconditionError("curve " + id_ + " needs a finite interval a < b");
  if (components_.empty() || components_.size() != derivatives_.size())
    throw PreconditionError("curve " + id_ + " needs one derivative per component");
}

std::vector<double> ParametricCurve::point(double t) const {
  std::vector<double> p(dim());
  for (std::size_t i = 0; i < dim(); ++i) p[i] = components_[i](t);
  return p;
}

std::vector<double> ParametricCurve::velocity(double t) const {
  std::vector<double> v(dim());
  for (std::size_t i = 0; i < dim(); ++i) v[i] = derivatives_[i](t);
  return v;
}

std::optional<double> ParametricCurve::first_singular_point(std::size_t grid, double floor) const {
  const std::size_t n = std::max<std::size_t>(grid, 2);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = a() + (b() - a()) * static_cast<double>(k) / static_cast<double>(n - 1);
    double speed2 = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
      const double d = derivatives_[i](t);
      speed2 += d * d;
    }
    if (speed2 <= floor) return t;
  }
  return std::nullopt;
}

double max_norm_distance(std::span<const double> p, std::span<const double> q) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) d = std::max(d, std::fabs(p[i] - q[i]));
  return d;
}

double ReparamTable::max_residual() const {
  double r = 0.0;
  for (const auto& row : rows) r = std::max(r, row.residual);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kSingularSpeed = 1e-10;
constexpr std::size_t kFallbackSamples = 1000;

std::vector<double> grid_points(double a, double b, std::size_t n) {
  std::vector<double> ts(n);
  for (std::size_t i = 0; i < n; ++i)
    ts[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  ts.back() = b;
  return ts;
}

std::size_t steepest_component(const ParametricCurve& c, double t) {
  std::size_t best = 0;
  double best_abs = -1.0;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const double d = std::fabs(c.component_derivative(i, t));
    if (d > best_abs) {
      best_abs = d;
      best = i;
    }
  }
  return best;
}

double residual_at(const ParametricCurve& gamma, const ParametricCurve& eta, double t, double s) {
  return max_norm_distance(gamma.point(t), eta.point(s));
}

struct Solve {
  double s;
  double residual;
};

// eta_j(s) = target, searched outward from s_prev in direction dir.
std::optional<Solve> local_solve(const ParametricCurve& gamma, const ParametricCurve& eta,
                                 std::size_t j, double t, double s_prev, double dir,
                                 double width) {
  const double target = gamma.component(j, t);
  const auto g = [&](double s) { return eta.component(j, s) - target; };
  const double end = dir > 0 ? eta.b() : eta.a();
  const double g0 = g(s_prev);
  if (g0 == 0.0) return Solve{s_prev, residual_at(gamma, eta, t, s_prev)};
  double w = std::max(width, 16.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(s_prev)));
  for (;;) {
    double s1 = s_prev + dir * w;
    const bool at_end = dir > 0 ? s1 >= end : s1 <= end;
    if (at_end) s1 = end;
    const double g1 = g(s1);
    if ((g1 > 0.0) != (g0 > 0.0) || g1 == 0.0) {
      const auto root = roots::bracketed_root(g, s_prev, s1);
      if (!root) return std::nullopt;
      return Solve{root->root, residual_at(gamma, eta, t, root->root)};
    }
    if (at_end) return Solve{end, residual_at(gamma, eta, t, end)};
    w *= 2.0;
  }
}

// Every sign change of eta_j - gamma_j(t) over the target domain; best full residual wins.
std::optional<Solve> global_solve(const ParametricCurve& gamma, const ParametricCurve& eta,
                                  std::size_t j, double t) {
  const double target = gamma.component(j, t);
  const auto g = [&](double s) { return eta.component(j, s) - target; };
  const auto ss = grid_points(eta.a(), eta.b(), kFallbackSamples);
  std::optional<Solve> best;
  auto consider = [&](double s) {
    const double r = residual_at(gamma, eta, t, s);
    if (!best || r < best->residual) best = Solve{s, r};
  };
  consider(ss.front());
  consider(ss.back());
  double prev = g(ss.front());
  for (std::size_t i = 1; i < ss.size(); ++i) {
    const double cur = g(ss[i]);
    if ((prev > 0.0) != (cur > 0.0) || cur == 0.0) {
      if (const auto root = roots::bracketed_root(g, ss[i - 1], ss[i])) consider(root->root);
    }
    prev = cur;
  }
  return best;
}

void require_injective(const ParametricCurve& c, const ReparamOptions& options) {
  const auto pairs = injectivity_probe(c, options.injectivity_grid,
                                       options.injectivity_separation * (c.b() - c.a()),
                                       options.tol, 1);
  if (!pairs.empty()) {
    throw TracesDifferError("curve " + c.id() + " is not injective: gamma(" +
                                std::to_string(pairs.front().t1) + ") = gamma(" +
                                std::to_string(pairs.front().t2) + ")",
                            pairs.front().t1);
  }
}

}  // namespace

ReparamTable reparametrize_at(const ParametricCurve& gamma, const ParametricCurve& eta,
                              std::span<const double> ts, const ReparamOptions& options) {
  if (gamma.dim() != eta.dim()) throw PreconditionError("curves differ in dimension");
  if (ts.size() < 2) throw PreconditionError("reparametrize needs at least two parameters");
  const double t_dir = ts[1] > ts[0] ? 1.0 : -1.0;
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (!((ts[i] - ts[i - 1]) * t_dir > 0.0))
      throw PreconditionError("parameters must be strictly monotone");
  }

  if (options.injectivity_check) {
    require_injective(gamma, options);
    require_injective(eta, options);
  }

  // Orientation from the endpoints; a closed curve has no distinguished start.
  if (max_norm_distance(gamma.point(gamma.a()), gamma.point(gamma.b())) <= options.tol ||
      max_norm_distance(eta.point(eta.a()), eta.point(eta.b())) <= options.tol)
    throw PreconditionError("closed curves are not reparametrizations of arcs");
  const auto start = gamma.point(ts[0]);
  const bool from_lo = max_norm_distance(start, eta.point(eta.a())) <= options.tol;
  const bool from_hi = max_norm_distance(start, eta.point(eta.b())) <= options.tol;
  if (!from_lo && !from_hi)
    throw TracesDifferError("gamma(" + std::to_string(ts[0]) + ") is not an endpoint of " + eta.id(),
                            ts[0]);

  const double s_dir = from_lo ? 1.0 : -1.0;
  ReparamTable table;
  table.source_id = gamma.id();
  table.target_id = eta.id();
  table.orientation_preserving = s_dir == t_dir;
  table.rows.reserve(ts.size());

  const double s0 = from_lo ? eta.a() : eta.b();
  table.rows.push_back({ts[0], s0, 0.0, max_norm_distance(start, eta.point(s0)),
                        steepest_component(eta, s0), false});
  double width = (eta.b() - eta.a()) / static_cast<double>(ts.size() - 1);

  for (std::size_t i = 1; i < ts.size(); ++i) {
    const double t = ts[i];
    const double s_prev = table.rows.back().s;
    std::size_t j = steepest_component(eta, s_prev);
    if (std::fabs(eta.component_derivative(j, s_prev)) <= kSingularSpeed)
      j = steepest_component(gamma, t);

    auto solved = local_solve(gamma, eta, j, t, s_prev, s_dir, width);
    if (!solved || solved->residual > options.tol) {
      const auto fallback = global_solve(gamma, eta, j, t);
      if (fallback && (!solved || fallback->residual < solved->residual)) solved = fallback;
    }
    if (!solved) throw GeometryError("no bracket for " + eta.id() + " at t = " + std::to_string(t));
    if (solved->residual > options.tol) {
      throw TracesDifferError("gamma(" + std::to_string(t) + ") is off the trace of " + eta.id() +
                                  " (residual " + std::to_string(solved->residual) + ")",
                              t);
    }
    if (i + 1 < ts.size()) {
      double speed2 = 0.0;
      for (const double v : eta.velocity(solved->s)) speed2 += v * v;
      double gspeed2 = 0.0;
      for (const double v : gamma.velocity(t)) gspeed2 += v * v;
      if (speed2 == 0.0 || gspeed2 == 0.0)
        throw PreconditionError("curve is not regular near t = " + std::to_string(t));
    }
    width = std::max(2.0 * std::fabs(solved->s - s_prev), width * 1e-3);
    table.rows.push_back({t, solved->s, 0.0, solved->residual, j, false});
  }

  // phi' from the component quotient, or from the table where eta_j' vanishes.
  const double expected_sign = table.orientation_preserving ? 1.0 : -1.0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    auto& row = table.rows[i];
    const double eta_d = eta.component_derivative(row.component, row.s);
    if (std::fabs(eta_d) > kSingularSpeed) {
      row.phi_prime = gamma.component_derivative(row.component, row.t) / eta_d;
    } else {
      const std::size_t lo = i == 0 ? 0 : i - 1;
      const std::size_t hi = i == 0 ? 1 : i;
      row.phi_prime = (table.rows[hi].s - table.rows[lo].s) / (table.rows[hi].t - table.rows[lo].t);
      row.target_singular = true;
    }
    if (!(std::fabs(row.phi_prime) >= options.phi_floor) ||
        (row.phi_prime > 0.0 ? 1.0 : -1.0) != expected_sign)
      table.violations.push_back(i);
  }
  return table;
}

ReparamTable reparametrize(const ParametricCurve& gamma, const ParametricCurve& eta,
                           std::size_t grid, const ReparamOptions& options) {
  if (grid < 2) throw PreconditionError("reparametrize needs grid >= 2");
  const auto ts = grid_points(gamma.a(), gamma.b(), grid);
  auto table = reparametrize_at(gamma, eta, ts, options);
  // Both arcs must end together, else gamma covers only part of eta's trace.
  const double far = table.orientation_preserving ? eta.b() : eta.a();
  const double gap = residual_at(gamma, eta, gamma.b(), far);
  if (gap > options.tol) {
    throw TracesDifferError("gamma ends at a point other than the far end of " + eta.id() +
                                " (distance " + std::to_string(gap) + ")",
                            gamma.b());
  }
  return table;
}

// ---------------------------------------------------------------------------

namespace {

// Levenberg-Marquardt on gamma(t1) - gamma(t2) = 0.
std::optional<CoincidencePair> refine_pair(const ParametricCurve& c, double t1, double t2,
                                           double tol) {
  const std::size_t n = c.dim();
  auto residual = [&](double u, double v) {
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = c.component(i, u) - c.component(i, v);
    return r;
  };
  auto norm2 = [](const std::vector<double>& r) {
    double s = 0.0;
    for (const double x : r) s += x * x;
    return s;
  };
  auto r = residual(t1, t2);
  double cost = norm2(r);
  double lambda = 1e-3;
  for (int it = 0; it < 60 && cost > 0.0; ++it) {
    double a11 = 0.0, a12 = 0.0, a22 = 0.0, g1 = 0.0, g2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double j1 = c.component_derivative(i, t1);
      const double j2 = -c.component_derivative(i, t2);
      a11 += j1 * j1;
      a12 += j1 * j2;
      a22 += j2 * j2;
      g1 += j1 * r[i];
      g2 += j2 * r[i];
    }
    bool improved = false;
    for (int tries = 0; tries < 20 && !improved; ++tries) {
      const double d11 = a11 + lambda * std::max(a11, 1e-12);
      const double d22 = a22 + lambda * std::max(a22, 1e-12);
      const double det = d11 * d22 - a12 * a12;
      if (!(std::fabs(det) > 0.0)) {
        lambda *= 10.0;
        continue;
      }
      const double u = std::clamp(t1 - (d22 * g1 - a12 * g2) / det, c.a(), c.b());
      const double v = std::clamp(t2 - (d11 * g2 - a12 * g1) / det, c.a(), c.b());
      const auto r_new = residual(u, v);
      const double cost_new = norm2(r_new);
      if (cost_new < cost) {
        improved = true;
        const double step = std::max(std::fabs(u - t1), std::fabs(v - t2));
        t1 = u;
        t2 = v;
        r = r_new;
        cost = cost_new;
        lambda = std::max(lambda / 10.0, 1e-12);
        if (step <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(t1)))
          it = 60;
      } else {
        lambda *= 10.0;
      }
    }
    if (!improved) break;
  }
  double dist = 0.0;
  for (const double x : r) dist = std::max(dist, std::fabs(x));
  if (dist > tol) return std::nullopt;
  if (t1 > t2) std::swap(t1, t2);
  return CoincidencePair{t1, t2, dist};
}

}  // namespace

std::vector<CoincidencePair> injectivity_probe(const ParametricCurve& curve, std::size_t grid,
                                               double separation, double tol,
                                               std::size_t max_pairs) {
  if (grid < 2) throw PreconditionError("injectivity_probe needs grid >= 2");
  const auto ts = grid_points(curve.a(), curve.b(), grid);
  std::vector<std::vector<double>> pts;
  pts.reserve(grid);
  for (const double t : ts) pts.push_back(curve.point(t));

  double cell = 0.0;
  for (std::size_t i = 1; i < grid; ++i) {
    double d2 = 0.0;
    for (std::size_t k = 0; k < curve.dim(); ++k) {
      const double d = pts[i][k] - pts[i - 1][k];
      d2 += d * d;
    }
    cell = std::max(cell, std::sqrt(d2));
  }
  if (!(cell > 0.0)) cell = 1.0;

  using Key = std::vector<long>;
  auto key_of = [&](const std::vector<double>& p) {
    Key k(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) k[i] = static_cast<long>(std::floor(p[i] / cell));
    return k;
  };
  std::map<Key, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < grid; ++i) buckets[key_of(pts[i])].push_back(i);

  std::vector<CoincidencePair> found;
  const double dedupe = 1e-6 * (curve.b() - curve.a());
  auto is_duplicate = [&](const CoincidencePair& p) {
    for (auto it = found.rbegin(); it != found.rend(); ++it) {
      if (std::fabs(it->t1 - p.t1) <= dedupe && std::fabs(it->t2 - p.t2) <= dedupe) return true;
    }
    return false;
  };

  // Neighbouring cells in every coordinate direction.
  std::vector<Key> offsets{Key(curve.dim(), 0)};
  for (std::size_t d = 0; d < curve.dim(); ++d) {
    std::vector<Key> next;
    for (const auto& o : offsets) {
      for (long s = -1; s <= 1; ++s) {
        auto k = o;
        k[d] = s;
        next.push_back(std::move(k));
      }
    }
    offsets = std::move(next);
  }

  for (std::size_t i = 0; i < grid && found.size() < max_pairs; ++i) {
    const Key home = key_of(pts[i]);
    std::vector<std::size_t> partners;
    for (const auto& o : offsets) {
      Key k = home;
      for (std::size_t d = 0; d < k.size(); ++d) k[d] += o[d];
      const auto it = buckets.find(k);
      if (it == buckets.end()) continue;
      for (const std::size_t j : it->second) {
        if (j > i && ts[j] - ts[i] >= separation) partners.push_back(j);
      }
    }
    std::sort(partners.begin(), partners.end());
    for (const std::size_t j : partners) {
      if (max_norm_distance(pts[i], pts[j]) > 2.0 * cell) continue;
      const auto pair = refine_pair(curve, ts[i], ts[j], tol);
      if (!pair || pair->t2 - pair->t1 < separation || is_duplicate(*pair)) continue;
      found.push_back(*pair);
      if (found.size() >= max_pairs) break;
    }
  }
  return found;
}

Claim1Verdict claim1_check(const ParametricCurve& gamma, const ParametricCurve& eta,
                           const ReparamTable& table, double threshold) {
  Claim1Verdict verdict;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    if (std::fabs(eta.component_derivative(row.component, row.s)) <= threshold) continue;
    ++verdict.rows_checked;
    if (!(std::fabs(gamma.component_derivative(row.component, row.t)) > 0.0))
      verdict.violations.push_back(i);
  }
  return verdict;
}

// ---------------------------------------------------------------------------

double polygon_length(const ParametricCurve& curve, std::size_t grid) {
  if (grid < 2) throw PreconditionError("polygon_length needs grid >= 2");
  const double a = curve.a();
  const double w = curve.b() - a;
  const double last = static_cast<double>(grid - 1);
  auto prev = curve.point(a);
  double length = 0.0;
  double carry = 0.0;  // Kahan
  for (std::size_t i = 1; i < grid; ++i) {
    const double t = i + 1 == grid ? curve.b() : a + w * static_cast<double>(i) / last;
    auto cur = curve.point(t);
    double d2 = 0.0;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      const double d = cur[k] - prev[k];
      d2 += d * d;
    }
    const double y = std::sqrt(d2) - carry;
    const double sum = length + y;
    carry = (sum - length) - y;
    length = sum;
    prev = std::move(cur);
  }
  return length;
}

ArclengthResult arclength(const ParametricCurve& curve, std::size_t grid, std::size_t doublings,
                          double growth_factor) {
  if (grid < 2) throw PreconditionError("arclength needs grid >= 2");
  ArclengthResult out;
  std::size_t points = grid;
  for (std::size_t i = 0; i <= doublings; ++i) {
    out.refinements.push_back(polygon_length(curve, points));
    points = 2 * (points - 1) + 1;  // nested grids, so lengths never decrease
  }
  out.lower_bound = out.refinements.front();
  out.diverging = doublings > 0;
  for (std::size_t i = 1; i < out.refinements.size(); ++i) {
    if (out.refinements[i] < growth_factor * out.refinements[i - 1]) out.diverging = false;
  }
  return out;
}

}  // namespace pathlab::curves
