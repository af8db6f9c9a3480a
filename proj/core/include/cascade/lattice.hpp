#pragma once

// N-site cascading system F = C o (f x ... x f): every site is iterated by the
// logistic map, then a left-to-right pass clips each site at c1 and carries the
// overflow into the next site. The carry out of the last site is the system's
// excess e^{j+1}.

#include <cstddef>
#include <span>
#include <vector>

#include "cascade/scalar_dynamics.hpp"

namespace cascade {

/// Site values plus the excess emitted by the step that produced them.
class LatticeState {
public:
  LatticeState() = default;
  /// Throws DomainError unless every site lies in [0, 1].
  explicit LatticeState(std::vector<double> sites, double last_excess = 0.0);

  static LatticeState uniform(std::size_t n, double value);

  std::size_t size() const noexcept { return sites_.size(); }
  std::span<const double> sites() const noexcept { return sites_; }
  double operator[](std::size_t i) const noexcept { return sites_[i]; }
  double last_excess() const noexcept { return last_excess_; }

  /// In-place step; returns the emitted excess.
  double advance(const Threshold& t) noexcept;

  friend bool operator==(const LatticeState&, const LatticeState&) = default;

private:
  std::vector<double> sites_;
  double last_excess_ = 0.0;
};

using ExcessTrace = std::vector<double>;

struct CascadeResult {
  std::vector<double> sites;
  double excess;
};

/// Cascade operator on logistic images y. A running value equal to c1 is kept
/// with zero carry; running values above 1 are compared against c1 as they are.
CascadeResult cascade(std::span<const double> y, const Threshold& t);

/// Cascade in place over `values`; returns the carry leaving the last site.
inline double cascade_in_place(std::span<double> values, double c1) noexcept {
  double carry = 0.0;
  for (double& v : values) {
    const double running = v + carry;
    if (running <= c1) {
      v = running;
      carry = 0.0;
    } else {
      v = c1;
      carry = running - c1;
    }
  }
  return carry;
}

/// One application of F in place; returns the emitted excess.
inline double step_in_place(std::span<double> sites, double c1) noexcept {
  for (double& x : sites) x = detail::logistic(x);
  return cascade_in_place(sites, c1);
}

LatticeState step(const LatticeState& s, const Threshold& t);

struct IterateResult {
  LatticeState final_state;
  ExcessTrace trace;
  /// The last min(k, record_last) states, oldest first.
  std::vector<LatticeState> states;
};

/// k applications of step. Only the last `record_last` states are kept.
IterateResult iterate(const LatticeState& s, const Threshold& t, std::size_t k,
                      std::size_t record_last = 0);

/// Runs `transient` steps, then returns the sum of the next `window` excesses.
double excess_window_sum(const LatticeState& s, const Threshold& t, std::size_t transient,
                         std::size_t window);

}  // namespace cascade
