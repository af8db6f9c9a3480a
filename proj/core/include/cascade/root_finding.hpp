#pragma once

#include <cmath>
#include <string>

#include "cascade/errors.hpp"

namespace cascade {

struct Interval {
  double lo;
  double hi;

  double width() const noexcept { return hi - lo; }
  double midpoint() const noexcept { return lo + 0.5 * (hi - lo); }
  /// Closed inclusion of `inner`, with end points allowed to overshoot by slack.
  bool contains(const Interval& inner, double slack = 0.0) const noexcept {
    return inner.lo >= lo - slack && inner.hi <= hi + slack;
  }
};

/// Bisection for a sign change of fn on [bracket.lo, bracket.hi]. Stops when
/// the bracket is narrower than xtol or cannot be split any further.
template <class Fn>
double bisect(Fn&& fn, Interval bracket, double xtol) {
  double lo = bracket.lo;
  double hi = bracket.hi;
  double f_lo = fn(lo);
  const double f_hi = fn(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw BracketError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  while (hi - lo > xtol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = fn(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace cascade
