#include <cmath>
#include <numbers>

#include "cascade/errors.hpp"
#include "cascade/random.hpp"
#include "cascade/scalar_dynamics.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cascade;

TEST_SUITE("scalar_dynamics") {

TEST_CASE("logistic map values and domain") {
  CHECK(logistic(0.5) == 1.0);
  CHECK(logistic(0.0) == 0.0);
  CHECK(logistic(1.0) == 0.0);
  CHECK(logistic(0.25) == 0.75);
  CHECK_THROWS_AS(logistic(-0.1), DomainError);
  CHECK_THROWS_AS(logistic(1.5), DomainError);
  CHECK_THROWS_AS(logistic(std::nan("")), DomainError);
}

TEST_CASE("threshold constants") {
  const Threshold t(0.84);
  CHECK(t.c0() == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(t.c_hi() == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(t.c2() == doctest::Approx(0.5376).epsilon(1e-14));
  CHECK(logistic(t.c0()) == doctest::Approx(0.84).epsilon(1e-14));
  CHECK(t.d1() == doctest::Approx(oracle::d1(0.84)).epsilon(1e-13));
  CHECK(std::abs(Threshold(0.9).d1() - 0.79517) < 5e-5);

  CHECK_THROWS_AS(Threshold(0.75), ParameterError);
  CHECK_THROWS_AS(Threshold(1.0), ParameterError);
  CHECK_THROWS_AS(Threshold(0.3), ParameterError);
  CHECK_THROWS_AS(Threshold(std::nan("")), ParameterError);
}

TEST_CASE("threshold map clips and emits excess") {
  const Threshold t(0.9);
  const auto below = threshold_map(0.2, t);
  CHECK(below.state == doctest::Approx(0.64));
  CHECK(below.excess == 0.0);

  const auto top = threshold_map(0.5, t);
  CHECK(top.state == 0.9);
  CHECK(top.excess == doctest::Approx(0.1));

  // f(x) == c1 exactly: keep the value, no excess.
  const Threshold tie_threshold(logistic(0.3));
  const auto tie = threshold_map(0.3, tie_threshold);
  CHECK(tie.state == tie_threshold.c1());
  CHECK(tie.excess == 0.0);

  CHECK_THROWS_AS(threshold_map(1.2, t), DomainError);
}

TEST_CASE("excess is non-negative and the state never exceeds c1") {
  SplitMix64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const Threshold t(0.75 + 0.25 * rng.next_open_unit());
    const double x = rng.next_unit();
    const auto r = threshold_map(x, t);
    REQUIRE(r.excess >= 0.0);
    REQUIRE(r.state <= t.c1());
    REQUIRE(r.state + r.excess == doctest::Approx(oracle::logistic(x)).epsilon(1e-15));
  }
}

TEST_CASE("forward orbit starts at c1") {
  const Threshold t(0.95);
  const auto orbit = forward_orbit(t, 10);
  REQUIRE(orbit.size() == 10);
  CHECK(orbit[0].state == 0.95);
  CHECK(orbit[0].excess == 0.0);
  CHECK(orbit[1].state == doctest::Approx(0.19));
  double x = 0.95;
  for (int k = 1; k < 10; ++k) x = std::min(oracle::logistic(x), 0.95);
  CHECK(orbit[9].state == x);
  CHECK(t.in_critical_interval(orbit[9].state));
}

TEST_CASE("orbit classification") {
  CHECK(classify_orbit(Threshold(0.84)) == OrbitClass{SuperStable{2, 1}});
  CHECK(period_of(classify_orbit(Threshold(0.95))) == 10);
  CHECK(period_of(classify_orbit(Threshold(0.94))) == 5);
  CHECK(period_of(classify_orbit(Threshold(0.97))) == 6);
  CHECK(period_of(classify_orbit(Threshold(0.99))) == 4);

  // xi_2 lands exactly on the repelling fixed point 3/4.
  const auto star = classify_orbit(Threshold(kStarTwo));
  CHECK_FALSE(std::holds_alternative<SuperStable>(star));
  CHECK(period_of(star) == 0);

  // At the end of the period-2 window c2 falls on the left end of C.
  CHECK(classify_orbit(Threshold(kPeriodTwoLimit)) == OrbitClass{Boundary{1}});
  CHECK(std::holds_alternative<Boundary>(classify_orbit(Threshold(0.9), 10000, 1.0)));
  CHECK_THROWS_AS(classify_orbit(Threshold(0.9), 0), DomainError);
}

TEST_CASE("period two holds across the window") {
  for (int k = 0; k < 50; ++k) {
    const double c1 = 0.751 + (0.904 - 0.751) * k / 49.0;
    CHECK_MESSAGE(period_of(classify_orbit(Threshold(c1))) == 2, "c1 = " << c1);
  }
}

TEST_CASE("tent conjugacy") {
  CHECK(to_tent(0.0) == 0.0);
  CHECK(to_tent(1.0) == doctest::Approx(1.0));
  CHECK(to_tent(0.5) == doctest::Approx(0.5));
  CHECK(from_tent(0.5) == doctest::Approx(0.5));
  CHECK(tent_map(0.25) == 0.5);
  CHECK(tent_map(0.75) == 0.5);
  CHECK(to_tent(0.9) == doctest::Approx(Threshold(0.9).d1()).epsilon(1e-14));

  SplitMix64 rng(11);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.next_unit();
    worst = std::max(worst, std::abs(to_tent(logistic(x)) - tent_map(to_tent(x))));
    REQUIRE(from_tent(to_tent(x)) == doctest::Approx(x).epsilon(1e-12));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("avoidance estimate") {
  const Threshold t(0.9);
  CHECK(avoidance_measure_tent(t, 0) == doctest::Approx(t.d1()));
  CHECK(avoidance_measure_tent(t, 3) == doctest::Approx(std::pow(t.d1(), 4)));

  // j = 0: the points outside C, measure 2 c0.
  const auto zero = estimate_avoidance(t, 0, 200000, 5);
  CHECK(std::abs(zero.fraction - 2.0 * t.c0()) < 4.0 * zero.standard_error);

  const auto a = estimate_avoidance(t, 4, 50000, 99);
  const auto b = estimate_avoidance(t, 4, 50000, 99);
  CHECK(a.fraction == b.fraction);
  CHECK(a.samples == 50000);
  CHECK(estimate_avoidance(t, 8, 50000, 99).fraction <= a.fraction);
  CHECK_THROWS_AS(estimate_avoidance(t, -1, 10, 1), DomainError);
}

}  // TEST_SUITE
