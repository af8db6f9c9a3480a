#include "cascade/attractors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cascade/errors.hpp"
#include "cascade/parallel.hpp"

namespace cascade {

std::string_view to_string(AttractorType type) noexcept {
  switch (type) {
    case AttractorType::InPhase: return "in-phase";
    case AttractorType::AntiPhase: return "anti-phase";
    case AttractorType::Ripple: return "ripple";
    case AttractorType::Other: return "other";
  }
  return "other";
}

bool AttractorRecord::is_trivial() const noexcept {
  if (period != 1 || orbit.empty()) return false;
  return std::all_of(orbit.front().begin(), orbit.front().end(), [](double x) { return x == 0.0; });
}

OrbitStates canonical_rotation(const OrbitStates& orbit) {
  const std::size_t p = orbit.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < p; ++r) {
    for (std::size_t k = 0; k < p; ++k) {
      const auto& a = orbit[(r + k) % p];
      const auto& b = orbit[(best + k) % p];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  OrbitStates out;
  out.reserve(p);
  for (std::size_t k = 0; k < p; ++k) out.push_back(orbit[(best + k) % p]);
  return out;
}

namespace {

double max_norm_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// carry_in[j][i] is the carry added to site i during the step orbit[j] -> orbit[j+1].
std::vector<std::vector<double>> carries(const OrbitStates& orbit, const Threshold& t) {
  std::vector<std::vector<double>> out;
  out.reserve(orbit.size());
  for (const auto& state : orbit) {
    std::vector<double> in(state.size(), 0.0);
    double carry = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
      in[i] = carry;
      const double running = detail::logistic(state[i]) + carry;
      carry = running <= t.c1() ? 0.0 : running - t.c1();
    }
    out.push_back(std::move(in));
  }
  return out;
}

}  // namespace

double ripple_defect(const OrbitStates& orbit) {
  const std::size_t p = orbit.size();
  double worst = 0.0;
  for (std::size_t j = 0; j < p; ++j) {
    const auto& now = orbit[j];
    const auto& next = orbit[(j + 1) % p];
    for (std::size_t i = 0; i + 1 < now.size(); ++i) worst = std::max(worst, std::abs(now[i] - next[i + 1]));
  }
  return worst;
}

double ripple_defect_carry_free(const OrbitStates& orbit, const Threshold& t) {
  const std::size_t p = orbit.size();
  const auto carry_in = carries(orbit, t);
  double worst = 0.0;
  for (std::size_t j = 0; j < p; ++j) {
    const auto& now = orbit[j];
    const auto& next = orbit[(j + 1) % p];
    for (std::size_t i = 0; i + 1 < now.size(); ++i) {
      if (carry_in[j][i + 1] != 0.0) continue;
      worst = std::max(worst, std::abs(now[i] - next[i + 1]));
    }
  }
  return worst;
}

AttractorType classify_attractor(const OrbitStates& orbit, const Threshold& t, double tol) {
  if (orbit.empty()) return AttractorType::Other;
  const std::size_t n = orbit.front().size();
  const std::size_t p = orbit.size();

  const bool in_phase = std::all_of(orbit.begin(), orbit.end(), [&](const auto& state) {
    return std::all_of(state.begin(), state.end(),
                       [&](double x) { return std::abs(x - state.front()) <= tol; });
  });
  if (in_phase) return AttractorType::InPhase;
  if (n < 2 || p < 2) return AttractorType::Other;

  const auto at_threshold = [&](double x) { return std::abs(x - t.c1()) <= tol; };
  for (std::size_t j = 0; j < p; ++j) {
    const auto& now = orbit[j];
    const auto& next = orbit[(j + 1) % p];
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (at_threshold(now[i]) != at_threshold(next[i + 1])) return AttractorType::Other;
    }
  }
  if (ripple_defect_carry_free(orbit, t) > tol) return AttractorType::Other;
  return n == 2 && p == 2 ? AttractorType::AntiPhase : AttractorType::Ripple;
}

std::optional<AttractorRecord> detect_periodic_orbit(const Threshold& t, const LatticeState& s0,
                                                     std::size_t transient, int max_period,
                                                     double tol) {
  if (!(tol > 0.0)) throw DomainError("detect_periodic_orbit: tol must be > 0");
  std::vector<double> base(s0.sites().begin(), s0.sites().end());
  for (std::size_t i = 0; i < transient; ++i) step_in_place(base, t.c1());

  OrbitStates visited{base};
  std::vector<double> x = base;
  for (int p = 1; p <= max_period; ++p) {
    step_in_place(x, t.c1());
    if (max_norm_distance(x, base) <= tol) {
      AttractorRecord rec;
      rec.period = p;
      rec.orbit = canonical_rotation(visited);
      rec.type = classify_attractor(rec.orbit, t, tol);
      rec.window_fingerprint = excess_window_sum(LatticeState(rec.orbit.front()), t, 0, kFingerprintWindow);
      return rec;
    }
    visited.push_back(x);
  }
  return std::nullopt;
}

double hausdorff_distance(const OrbitStates& a, const OrbitStates& b) {
  const auto directed = [](const OrbitStates& from, const OrbitStates& to) {
    double worst = 0.0;
    for (const auto& u : from) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& v : to) nearest = std::min(nearest, max_norm_distance(u, v));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

std::size_t CensusResult::nontrivial_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(attractors.begin(), attractors.end(),
                                                [](const CensusEntry& e) { return !e.attractor.is_trivial(); }));
}

CensusResult census(const Threshold& t, std::size_t sites, std::size_t samples, std::uint64_t seed,
                    const CensusOptions& options) {
  if (sites < 1) throw ParameterError("census: need at least one site");
  if (samples < 1) throw ParameterError("census: samples must be >= 1");

  std::vector<std::optional<AttractorRecord>> found(samples);
  parallel_for(samples, options.workers, [&](std::size_t k) {
    SplitMix64 rng(mix_seed(seed, k));
    std::vector<double> x(sites);
    for (double& v : x) v = rng.next_open_unit();
    found[k] = detect_periodic_orbit(t, LatticeState(std::move(x)), options.transient,
                                     options.max_period, options.tol);
  });

  // Sequential merge in sample order keeps the result schedule independent.
  CensusResult result;
  result.samples = samples;
  for (auto& rec : found) {
    if (!rec) {
      ++result.unresolved;
      continue;
    }
    auto match = std::find_if(result.attractors.begin(), result.attractors.end(), [&](const CensusEntry& e) {
      return e.attractor.period == rec->period &&
             hausdorff_distance(e.attractor.orbit, rec->orbit) <= kDedupDistance;
    });
    if (match != result.attractors.end()) {
      ++match->hits;
    } else {
      result.attractors.push_back({std::move(*rec), 1});
    }
  }
  std::stable_sort(result.attractors.begin(), result.attractors.end(),
                   [](const CensusEntry& a, const CensusEntry& b) { return a.hits > b.hits; });
  return result;
}

}  // namespace cascade
