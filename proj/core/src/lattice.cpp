#include "cascade/lattice.hpp"

#include <algorithm>
#include <string>

#include "cascade/errors.hpp"

namespace cascade {

LatticeState::LatticeState(std::vector<double> sites, double last_excess)
    : sites_(std::move(sites)), last_excess_(last_excess) {
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (!(sites_[i] >= 0.0 && sites_[i] <= 1.0)) {
      throw DomainError("lattice site " + std::to_string(i) + " = " + std::to_string(sites_[i]) +
                        " is outside [0, 1]");
    }
  }
  if (!(last_excess_ >= 0.0)) throw DomainError("lattice excess must be non-negative");
}

LatticeState LatticeState::uniform(std::size_t n, double value) {
  return LatticeState(std::vector<double>(n, value));
}

double LatticeState::advance(const Threshold& t) noexcept {
  last_excess_ = step_in_place(sites_, t.c1());
  return last_excess_;
}

CascadeResult cascade(std::span<const double> y, const Threshold& t) {
  CascadeResult out{std::vector<double>(y.begin(), y.end()), 0.0};
  out.excess = cascade_in_place(out.sites, t.c1());
  return out;
}

LatticeState step(const LatticeState& s, const Threshold& t) {
  LatticeState next = s;
  next.advance(t);
  return next;
}

IterateResult iterate(const LatticeState& s, const Threshold& t, std::size_t k,
                      std::size_t record_last) {
  IterateResult out{s, {}, {}};
  out.trace.reserve(k);
  const std::size_t keep = std::min(k, record_last);
  out.states.reserve(keep);

  for (std::size_t i = 0; i < k; ++i) {
    out.trace.push_back(out.final_state.advance(t));
    if (i + keep >= k) out.states.push_back(out.final_state);
  }
  return out;
}

double excess_window_sum(const LatticeState& s, const Threshold& t, std::size_t transient,
                         std::size_t window) {
  if (window < 1) throw DomainError("excess_window_sum: window must be >= 1");
  std::vector<double> sites(s.sites().begin(), s.sites().end());
  const double c1 = t.c1();
  for (std::size_t i = 0; i < transient; ++i) step_in_place(sites, c1);
  double sum = 0.0;
  for (std::size_t i = 0; i < window; ++i) sum += step_in_place(sites, c1);
  return sum;
}

}  // namespace cascade
