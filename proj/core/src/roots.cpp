#include "pathlab/roots.hpp"

#include <cmath>
#include <limits>

#include <boost/math/tools/toms748_solve.hpp>

namespace pathlab::roots {

std::optional<RootResult> bracketed_root(const std::function<double(double)>& f, double lo,
                                         double hi, std::uintmax_t max_iterations) {
  if (lo > hi) std::swap(lo, hi);
  const double flo = f(lo);
  const double fhi = f(hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi)) return std::nullopt;
  if (flo == 0.0) return RootResult{lo, 0};
  if (fhi == 0.0) return RootResult{hi, 0};
  if ((flo > 0.0) == (fhi > 0.0)) return std::nullopt;

  std::uintmax_t iterations = max_iterations;
  const boost::math::tools::eps_tolerance<double> tolerance(
      std::numeric_limits<double>::digits - 2);
  try {
    const auto [a, b] =
        boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tolerance, iterations);
    if (iterations >= max_iterations) return std::nullopt;
    // Prefer whichever end of the final bracket has the smaller residual.
    const double root = std::fabs(f(a)) <= std::fabs(f(b)) ? a : b;
    return RootResult{root, iterations};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace pathlab::roots
