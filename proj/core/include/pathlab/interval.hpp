#pragma once

#include <cstdio>
#include <limits>
#include <string>

#include "pathlab/errors.hpp"

namespace pathlab {

/// A real interval with independently open or closed endpoints.
/// Endpoints may be infinite (always treated as open).
class Interval {
 public:
  Interval(double lo, double hi, bool lo_closed, bool hi_closed)
      : lo_(lo), hi_(hi), lo_closed_(lo_closed), hi_closed_(hi_closed) {
    if (!(lo <= hi)) throw PreconditionError("interval requires lo <= hi");
    if (lo == hi && !(lo_closed && hi_closed))
      throw PreconditionError("degenerate interval must be closed at both ends");
  }

  static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }
  static Interval open(double lo, double hi) { return {lo, hi, false, false}; }
  static Interval real_line() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {-inf, inf, false, false};
  }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  bool lo_closed() const noexcept { return lo_closed_; }
  bool hi_closed() const noexcept { return hi_closed_; }
  double width() const noexcept { return hi_ - lo_; }

  bool contains(double x) const noexcept {
    const bool above = lo_closed_ ? x >= lo_ : x > lo_;
    const bool below = hi_closed_ ? x <= hi_ : x < hi_;
    return above && below;
  }

  /// True when every point of `other` lies in this interval.
  bool contains(const Interval& other) const noexcept {
    const bool lo_ok = other.lo_ > lo_ || (other.lo_ == lo_ && (lo_closed_ || !other.lo_closed_));
    const bool hi_ok = other.hi_ < hi_ || (other.hi_ == hi_ && (hi_closed_ || !other.hi_closed_));
    return lo_ok && hi_ok;
  }

  std::string to_string() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%c%.17g, %.17g%c", lo_closed_ ? '[' : '(', lo_, hi_,
                  hi_closed_ ? ']' : ')');
    return buf;
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
  bool lo_closed_;
  bool hi_closed_;
};

}  // namespace pathlab
