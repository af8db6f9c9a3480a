#pragma once

// Reference computations used only by the tests. Each one reaches its answer
// by a route that shares no code with the library.

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

inline double logistic(double x) { return 4.0 * x * (1.0 - x); }

/// Plain bisection on [lo, hi]; `fn` must change sign.
template <class Fn>
double bisect(Fn fn, double lo, double hi, int rounds = 200) {
  const bool lo_negative = fn(lo) < 0.0;
  for (int i = 0; i < rounds; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((fn(mid) < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Left inverse branch of the logistic map.
inline double left_branch(double y) { return 0.5 * (1.0 - std::sqrt(1.0 - y)); }

/// xi_s in closed form. f(xi_s) must be the point that reaches 1/4 after s-2
/// steps along left-branch preimages, so xi_s = (1 + sqrt(1 - L^{s-2}(1/4)))/2.
inline double star(int s) {
  double y = 0.25;
  for (int i = 0; i < s - 2; ++i) y = left_branch(y);
  return 0.5 * (1.0 + std::sqrt(1.0 - y));
}

/// Spectral radius of the Markov matrix from its cycle structure. Row r with a
/// first-column entry closes a cycle 0 -> 1 -> ... -> r -> 0 of length r + 1,
/// so the radius is the root above 1 of sum_{r=n0}^{n} lambda^{-(r+1)} = 1.
inline double markov_radius(int n0, int n) {
  const auto g = [n0, n](double lambda) {
    double sum = 0.0;
    for (int r = n0; r <= n; ++r) sum += std::pow(lambda, -(r + 1));
    return sum - 1.0;
  };
  return bisect(g, 1.0 + 1e-12, 2.0);
}

/// The anti-phase inequality written directly in terms of c1.
inline double antiphase_margin(double c1) {
  const double c0 = 0.5 - 0.5 * std::sqrt(1.0 - c1);
  const double c2 = logistic(c1);
  const double e = logistic(c2) - c1;
  return (1.0 - c0) - (c2 + e);
}

/// Tent-conjugacy image of c1 via asin instead of acos.
inline double d1(double c1) { return 2.0 / std::numbers::pi * std::asin(std::sqrt(c1)); }

struct CascadeOut {
  std::vector<double> x;
  double excess;
};

/// Left-to-right carry written as a fold over (site, carry) pairs.
inline CascadeOut cascade(const std::vector<double>& y, double c1) {
  CascadeOut out{{}, 0.0};
  double carry = 0.0;
  for (double v : y) {
    const double hat = v + carry;
    const bool clip = hat > c1;
    out.x.push_back(clip ? c1 : hat);
    carry = clip ? hat - c1 : 0.0;
  }
  out.excess = carry;
  return out;
}

inline CascadeOut step(const std::vector<double>& x, double c1) {
  std::vector<double> y;
  y.reserve(x.size());
  for (double v : x) y.push_back(logistic(v));
  return cascade(y, c1);
}

}  // namespace oracle
