#pragma once

#include <cstdint>
#include <functional>
#include <optional>

namespace pathlab::roots {

struct RootResult {
  double root = 0.0;
  std::uintmax_t iterations = 0;
};

/// Root of f in [lo, hi] given f(lo) and f(hi) of opposite sign (or one of
/// them zero). Returns nullopt when the bracket is invalid or iteration
/// stalls. Converges to a few ulps.
std::optional<RootResult> bracketed_root(const std::function<double(double)>& f, double lo,
                                         double hi, std::uintmax_t max_iterations = 200);

}  // namespace pathlab::roots
