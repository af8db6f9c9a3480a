#pragma once

// Single-site threshold map f_c(x) = min(4x(1-x), c) with excess, its critical
// interval and absorbing set, orbit classification and tent-map conjugacy.

#include <cstdint>
#include <variant>
#include <vector>

namespace cascade {

/// (5 + sqrt 5) / 8: upper end of the period-2 window.
inline constexpr double kPeriodTwoLimit = 0.90450849718747371;
/// (2 + sqrt 3) / 4: second star value.
inline constexpr double kStarTwo = 0.93301270189221932;
/// Above 15/16 the logistic map is a contraction on the critical interval.
inline constexpr double kRippleThreshold = 15.0 / 16.0;
/// Unstable interior fixed point of the logistic map.
inline constexpr double kInteriorFixedPoint = 0.75;

inline constexpr int kDefaultMaxIter = 10000;
inline constexpr double kDefaultBoundaryTol = 1e-12;

/// Logistic map 4x(1-x). Throws DomainError unless 0 <= x <= 1.
double logistic(double x);

namespace detail {
inline double logistic(double x) noexcept { return 4.0 * x * (1.0 - x); }
}  // namespace detail

/// A threshold c1 in (3/4, 1) with the constants derived from it in closed
/// form:
///   c0  = 1/2 - sqrt(1 - c1)/2,  critical interval C = [c0, 1 - c0]
///   c2  = f(c1),                 absorbing set A = [c2, c1]
///   d1  = acos(1 - 2 c1) / pi,   image of c1 under the tent conjugacy
class Threshold {
public:
  /// Throws ParameterError unless 3/4 < c1 < 1.
  explicit Threshold(double c1);

  double c1() const noexcept { return c1_; }
  double c0() const noexcept { return c0_; }
  /// Right end of C, 1 - c0 (computed as 1/2 + sqrt(1 - c1)/2).
  double c_hi() const noexcept { return c_hi_; }
  double c2() const noexcept { return c2_; }
  double d1() const noexcept { return d1_; }

  bool in_critical_interval(double x) const noexcept { return x >= c0_ && x <= c_hi_; }
  /// Distance from x to the nearer end point of C.
  double distance_to_boundary(double x) const noexcept;

private:
  double c1_;
  double c0_;
  double c_hi_;
  double c2_;
  double d1_;
};

Threshold make_threshold(double c1);

/// One application of the threshold map: state = min(f(x), c1) and
/// excess = f(x) - state.
struct ThresholdStep {
  double state;
  double excess;
};

/// Threshold map. f(x) == c1 takes the clip branch with zero excess.
ThresholdStep threshold_map(double x, const Threshold& t);

/// The orbit c1, c2, ..., c_k of the threshold. Each entry carries the excess
/// emitted when it was produced (0 for the seed c1).
std::vector<ThresholdStep> forward_orbit(const Threshold& t, int k);

struct SuperStable {
  int period;
  /// Map applications from c1 to the orbit point inside int(C).
  int steps_to_c;
  friend bool operator==(const SuperStable&, const SuperStable&) = default;
};

struct Repeller {
  int iterations_checked;
  friend bool operator==(const Repeller&, const Repeller&) = default;
};

struct Boundary {
  int step;
  friend bool operator==(const Boundary&, const Boundary&) = default;
};

using OrbitClass = std::variant<SuperStable, Repeller, Boundary>;

/// Classifies the orbit of c1. Points within boundary_tol of an end point of C
/// give Boundary; a point within boundary_tol of the repelling fixed point 3/4
/// gives Repeller (rounding would otherwise decide the outcome).
OrbitClass classify_orbit(const Threshold& t, int max_iter = kDefaultMaxIter,
                          double boundary_tol = kDefaultBoundaryTol);

/// Period of a SuperStable class, or 0.
int period_of(const OrbitClass& c) noexcept;

/// Conjugacy h(x) = (2/pi) asin(sqrt x) taking the logistic map to the
/// slope-2 tent map.
double to_tent(double x);
/// h^{-1}(u) = sin^2(pi u / 2).
double from_tent(double u);
/// Tent map T(u) = 1 - |1 - 2u|.
double tent_map(double u) noexcept;

/// Tent-measure of the points that avoid C for j steps, d1^(j+1).
double avoidance_measure_tent(const Threshold& t, int j);

struct AvoidanceEstimate {
  double fraction;
  double standard_error;
  std::uint64_t samples;
};

/// Monte Carlo estimate of the Lebesgue measure of R_j, the points whose
/// iterates 0..j all avoid C. Deterministic for a given seed.
AvoidanceEstimate estimate_avoidance(const Threshold& t, int j, std::uint64_t samples,
                                     std::uint64_t seed);

}  // namespace cascade
