#include <cmath>

#include "cascade/attractors.hpp"
#include "cascade/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cascade;

namespace {

/// Scalar orbit point c_k of the threshold (c_1 = c1).
double orbit_point(const Threshold& t, int k) {
  return forward_orbit(t, k).back().state;
}

}  // namespace

TEST_SUITE("attractor_analysis") {

TEST_CASE("canonical rotation") {
  const OrbitStates o{{0.5, 0.2}, {0.1, 0.9}, {0.3, 0.3}};
  const OrbitStates want{{0.1, 0.9}, {0.3, 0.3}, {0.5, 0.2}};
  CHECK(canonical_rotation(o) == want);
  CHECK(canonical_rotation(want) == want);
  CHECK(canonical_rotation({}).empty());
}

TEST_CASE("detect in-phase and anti-phase orbits at 0.84") {
  const Threshold t(0.84);
  const auto in_phase = detect_periodic_orbit(t, LatticeState({0.5, 0.5}), 100, 64);
  REQUIRE(in_phase);
  CHECK(in_phase->period == 2);
  CHECK(in_phase->type == AttractorType::InPhase);
  CHECK(in_phase->window_fingerprint == doctest::Approx(12.0 * (oracle::logistic(0.5376) - 0.84)));

  const auto anti = detect_periodic_orbit(t, LatticeState({t.c2(), t.c1()}), 100, 64);
  REQUIRE(anti);
  CHECK(anti->period == 2);
  CHECK(anti->type == AttractorType::AntiPhase);
  CHECK(anti->orbit[0][0] == doctest::Approx(t.c2()));
  CHECK(anti->orbit[0][1] == doctest::Approx(t.c1()));
  CHECK_FALSE(anti->is_trivial());
}

TEST_CASE("fixed point at the origin") {
  const auto r = detect_periodic_orbit(Threshold(0.84), LatticeState::uniform(2, 0.0), 10, 8);
  REQUIRE(r);
  CHECK(r->period == 1);
  CHECK(r->is_trivial());
  CHECK(r->window_fingerprint == 0.0);
}

TEST_CASE("records close under the map") {
  const Threshold t(0.95);
  const auto r = detect_periodic_orbit(t, LatticeState({0.31, 0.62, 0.44}), 500, 256);
  REQUIRE(r);
  LatticeState s(r->orbit[0]);
  for (int k = 0; k < r->period; ++k) s.advance(t);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(s[i] - r->orbit[0][i]) <= 1e-9);
  CHECK(canonical_rotation(r->orbit) == r->orbit);
}

TEST_CASE("ripple orbit at 0.95 from the staggered construction") {
  const Threshold t(0.95);
  REQUIRE(t.c1() > kRippleThreshold);
  const int p = period_of(classify_orbit(t));
  REQUIRE(p == 10);
  // Site 1 starts in C; site i starts i-1 scalar steps behind it.
  const LatticeState s0({0.5, orbit_point(t, p - 1), orbit_point(t, p - 2)});
  const auto r = detect_periodic_orbit(t, s0, 100, 64);
  REQUIRE(r);
  CHECK(r->period == p);
  CHECK(r->type == AttractorType::Ripple);
  CHECK(ripple_defect_carry_free(r->orbit, t) <= 1e-9);
  // The carry shifts the receiving site by the excess, so the literal
  // relation misses by about e.
  CHECK(ripple_defect(r->orbit) > 0.01);
}

TEST_CASE("classification of hand-built orbits") {
  const Threshold t(0.84);
  CHECK(classify_attractor({{0.5, 0.5}, {0.6, 0.6}}, t) == AttractorType::InPhase);
  CHECK(classify_attractor({{0.5, 0.6}}, t) == AttractorType::Other);
  CHECK(classify_attractor({{0.2, 0.6}, {0.7, 0.3}}, Threshold(0.9)) == AttractorType::Other);
  // Clip timing that does not lag from site to site.
  CHECK(classify_attractor({{0.84, 0.84}, {0.5376, 0.6}}, t) == AttractorType::Other);
  CHECK(to_string(AttractorType::AntiPhase) == "anti-phase");
  CHECK(to_string(AttractorType::Ripple) == "ripple");
}

TEST_CASE("Hausdorff distance") {
  const OrbitStates a{{0.0, 0.0}, {1.0, 1.0}};
  const OrbitStates b{{1.0, 1.0}, {0.0, 0.1}};
  CHECK(hausdorff_distance(a, a) == 0.0);
  CHECK(hausdorff_distance(a, b) == doctest::Approx(0.1));
  CHECK(hausdorff_distance(a, b) == hausdorff_distance(b, a));
}

TEST_CASE("census at 0.84 and 0.80") {
  CensusOptions options;
  options.transient = 1000;
  const auto two = census(Threshold(0.84), 2, 2000, 42, options);
  CHECK(two.attractors.size() == 2);
  CHECK(two.unresolved == 0);
  CHECK(two.samples == 2000);
  std::size_t hits = 0;
  for (const auto& e : two.attractors) hits += e.hits;
  CHECK(hits == 2000);
  CHECK(two.attractors[0].hits >= two.attractors[1].hits);

  const auto low = census(Threshold(0.80), 2, 2000, 42, options);
  CHECK(low.nontrivial_count() == 1);
  CHECK(low.attractors[0].attractor.type == AttractorType::InPhase);
}

TEST_CASE("census does not depend on the worker count") {
  CensusOptions one;
  one.workers = 1;
  CensusOptions many;
  many.workers = 4;
  const auto a = census(Threshold(0.95), 2, 500, 9, one);
  const auto b = census(Threshold(0.95), 2, 500, 9, many);
  REQUIRE(a.attractors.size() == b.attractors.size());
  for (std::size_t i = 0; i < a.attractors.size(); ++i) {
    CHECK(a.attractors[i].hits == b.attractors[i].hits);
    CHECK(a.attractors[i].attractor.orbit == b.attractors[i].attractor.orbit);
  }
  const auto c = census(Threshold(0.95), 2, 500, 10, one);
  CHECK(c.samples == 500);
}

}  // TEST_SUITE
