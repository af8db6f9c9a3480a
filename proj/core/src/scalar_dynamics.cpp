#include "cascade/scalar_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cascade/errors.hpp"
#include "cascade/random.hpp"

namespace cascade {

double logistic(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("logistic: x = " + std::to_string(x) + " is outside [0, 1]");
  }
  return detail::logistic(x);
}

Threshold::Threshold(double c1) : c1_(c1) {
  if (!(c1 > 0.75 && c1 < 1.0)) {
    throw ParameterError("threshold c1 = " + std::to_string(c1) + " must lie in (3/4, 1)");
  }
  const double half_root = 0.5 * std::sqrt(1.0 - c1);
  c0_ = 0.5 - half_root;
  c_hi_ = 0.5 + half_root;
  c2_ = threshold_map(c1, *this).state;
  d1_ = std::acos(1.0 - 2.0 * c1) / std::numbers::pi;
}

double Threshold::distance_to_boundary(double x) const noexcept {
  return std::min(std::abs(x - c0_), std::abs(x - c_hi_));
}

Threshold make_threshold(double c1) { return Threshold(c1); }

ThresholdStep threshold_map(double x, const Threshold& t) {
  const double y = logistic(x);
  if (y <= t.c1()) return {y, 0.0};
  return {t.c1(), y - t.c1()};
}

std::vector<ThresholdStep> forward_orbit(const Threshold& t, int k) {
  if (k < 1) throw DomainError("forward_orbit: k must be >= 1");
  std::vector<ThresholdStep> orbit;
  orbit.reserve(static_cast<std::size_t>(k));
  orbit.push_back({t.c1(), 0.0});
  while (static_cast<int>(orbit.size()) < k) orbit.push_back(threshold_map(orbit.back().state, t));
  return orbit;
}

OrbitClass classify_orbit(const Threshold& t, int max_iter, double boundary_tol) {
  if (max_iter < 1) throw DomainError("classify_orbit: max_iter must be >= 1");
  if (!(boundary_tol > 0.0)) throw DomainError("classify_orbit: boundary_tol must be > 0");

  double x = t.c1();
  for (int step = 0; step < max_iter; ++step) {
    if (t.distance_to_boundary(x) <= boundary_tol) return Boundary{step};
    if (t.in_critical_interval(x)) {
      // The next point is c1 exactly, so the cycle through c1 closes exactly.
      int period = 0;
      double y = t.c1();
      do {
        y = threshold_map(y, t).state;
        ++period;
      } while (y != t.c1() && period <= step + 1);
      return SuperStable{period, step};
    }
    if (std::abs(x - kInteriorFixedPoint) <= boundary_tol) return Repeller{step};
    x = threshold_map(x, t).state;
  }
  return Repeller{max_iter};
}

int period_of(const OrbitClass& c) noexcept {
  if (const auto* s = std::get_if<SuperStable>(&c)) return s->period;
  return 0;
}

double to_tent(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("to_tent: x outside [0, 1]");
  // atan2 form keeps full accuracy near both end points.
  return (2.0 / std::numbers::pi) * std::atan2(std::sqrt(x), std::sqrt(1.0 - x));
}

double from_tent(double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("from_tent: u outside [0, 1]");
  const double s = std::sin(0.5 * std::numbers::pi * u);
  return s * s;
}

double tent_map(double u) noexcept { return 1.0 - std::abs(1.0 - 2.0 * u); }

double avoidance_measure_tent(const Threshold& t, int j) {
  if (j < 0) throw DomainError("avoidance_measure_tent: j must be >= 0");
  return std::pow(t.d1(), j + 1);
}

AvoidanceEstimate estimate_avoidance(const Threshold& t, int j, std::uint64_t samples,
                                     std::uint64_t seed) {
  if (j < 0) throw DomainError("estimate_avoidance: j must be >= 0");
  if (samples < 1) throw DomainError("estimate_avoidance: samples must be >= 1");

  // Outside C the threshold map is plain f, so no clipping is needed here.
  SplitMix64 rng(seed);
  std::uint64_t avoided = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    double x = rng.next_unit();
    bool hit = false;
    for (int step = 0; step <= j; ++step) {
      if (t.in_critical_interval(x)) {
        hit = true;
        break;
      }
      x = detail::logistic(x);
    }
    if (!hit) ++avoided;
  }
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(avoided) / n;
  return {p, std::sqrt(p * (1.0 - p) / n), samples};
}

}  // namespace cascade
