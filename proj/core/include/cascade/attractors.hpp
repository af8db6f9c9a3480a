#pragma once

// Periodic attractors of the lattice: recurrence detection, phase
// canonicalisation, type classification and seeded Monte Carlo census.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cascade/lattice.hpp"
#include "cascade/random.hpp"

namespace cascade {

enum class AttractorType { InPhase, AntiPhase, Ripple, Other };

std::string_view to_string(AttractorType type) noexcept;

inline constexpr double kRecurrenceTol = 1e-9;
inline constexpr double kDedupDistance = 1e-6;
inline constexpr std::size_t kFingerprintWindow = 12;

using OrbitStates = std::vector<std::vector<double>>;

struct AttractorRecord {
  int period = 0;
  /// Orbit states rotated so the sequence is lexicographically least.
  OrbitStates orbit;
  AttractorType type = AttractorType::Other;
  /// Excess summed over 12 steps from orbit[0].
  double window_fingerprint = 0.0;

  std::size_t sites() const noexcept { return orbit.empty() ? 0 : orbit.front().size(); }
  /// The fixed point at the origin.
  bool is_trivial() const noexcept;
};

/// Rotation of `orbit` that is lexicographically least, comparing states
/// site by site.
OrbitStates canonical_rotation(const OrbitStates& orbit);

/// Type of a periodic orbit (states in time order).
///  InPhase:   every state has all sites equal.
///  Ripple:    site i+1 repeats site i one step later. The relation
///             x_i^j = x_{i+1}^{j+1} is required wherever site i+1 received no
///             carry on that step, and x_i^j = c1 iff x_{i+1}^{j+1} = c1
///             everywhere. A carry shifts the receiving site by the excess, so
///             the literal relation cannot hold on those entries.
///  AntiPhase: a ripple with two sites and period 2.
AttractorType classify_attractor(const OrbitStates& orbit, const Threshold& t,
                                 double tol = kRecurrenceTol);

/// Largest |x_i^j - x_{i+1}^{j+1}| over all sites and phases (indices mod p).
double ripple_defect(const OrbitStates& orbit);

/// Same, restricted to entries where site i+1 received no carry.
double ripple_defect_carry_free(const OrbitStates& orbit, const Threshold& t);

/// Runs `transient` steps, then looks for the least p <= max_period with
/// |F^p(x) - x|_inf <= tol.
std::optional<AttractorRecord> detect_periodic_orbit(const Threshold& t, const LatticeState& s0,
                                                     std::size_t transient, int max_period,
                                                     double tol = kRecurrenceTol);

/// Hausdorff distance between two orbits seen as finite sets of states in the
/// max norm.
double hausdorff_distance(const OrbitStates& a, const OrbitStates& b);

struct CensusEntry {
  AttractorRecord attractor;
  std::size_t hits;
};

struct CensusResult {
  /// Distinct attractors, most hits first.
  std::vector<CensusEntry> attractors;
  /// Samples for which no orbit of period <= max_period was found.
  std::size_t unresolved = 0;
  std::size_t samples = 0;

  std::size_t nontrivial_count() const noexcept;
};

struct CensusOptions {
  std::size_t transient = 1000;
  int max_period = 256;
  double tol = kRecurrenceTol;
  unsigned workers = 0;
};

/// Draws `samples` initial states uniformly from (0,1)^N, sample k seeded with
/// mix_seed(seed, k), and groups the attractors they reach. The output does
/// not depend on the worker count.
CensusResult census(const Threshold& t, std::size_t sites, std::size_t samples,
                    std::uint64_t seed = kDefaultSeed, const CensusOptions& options = {});

}  // namespace cascade
