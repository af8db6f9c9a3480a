#pragma once

// Parameter-space analysis of the threshold: anti-phase existence, star
// values, the Markov partition near 3/4 and bifurcation scans.

#include <cstddef>
#include <optional>
#include <vector>

#include "cascade/root_finding.hpp"
#include "cascade/scalar_dynamics.hpp"

namespace cascade {

/// True when c2 + e(c2) <= 1 - c0, the condition for a super-stable
/// anti-phase orbit of the two-site system in the period-2 window.
bool antiphase_condition(const Threshold& t);

/// Critical threshold (about 0.836272348) above which the anti-phase orbit
/// exists, from bisection on 19c - 84c^2 + 128c^3 - 64c^4 = (1 + sqrt(1-c))/2.
double antiphase_root();

/// Threshold xi_s whose orbit reaches 3/4 after s steps, all intermediate
/// points staying below 1/2.
struct StarValue {
  int s;
  double value;
};

/// Residual f^s(c) - 3/4 of the threshold map started at c.
double star_residual(int s, double c);

/// Bisection for xi_s in `bracket`. Throws BracketError without a sign change
/// and ParameterError if the root violates the intermediate-orbit condition.
StarValue find_star(int s, Interval bracket);

/// Default bracket for xi_s, derived from xi_{s-1} by the 1/4 spacing ratio.
Interval star_bracket(int s, std::optional<double> previous);

/// xi_2 .. xi_max_s, each bracketed from its predecessor.
std::vector<StarValue> star_values(int max_s);

/// Markov partition near 3/4: J0 = (c2, c0) and its preimages J_{-i} under the
/// right inverse branch g(y) = 1/2 + sqrt(1 - y)/2.
struct MarkovModel {
  double c1;
  Interval j0;
  /// J_{-1} .. J_{-n}.
  std::vector<Interval> branch_preimages;
  /// Image f(J0) = (c3, c1).
  Interval image_of_j0;
  /// Smallest index with J_{-i} inside f(J0) for every i >= n0.
  int n0;
  /// (n+1) x (n+1) row-major 0/1 matrix. Entry (r, c) is 1 when f maps J_{-c}
  /// over J_{-r}: ones on the superdiagonal and in rows n0..n of column 0.
  std::vector<int> matrix;
  int dimension;
  double spectral_radius;

  int at(int row, int col) const noexcept { return matrix[static_cast<std::size_t>(row * dimension + col)]; }
  double entropy_bound() const;
};

inline constexpr double kMarkovSlack = 1e-14;

/// Index n0 for this threshold. Throws ParameterError unless c1 > xi_2.
int markov_base_index(const Threshold& t);

/// Builds M_n. Throws ParameterError unless c1 > xi_2 and n >= n0 + 1.
MarkovModel build_markov(const Threshold& t, int n);

/// Spectral radius of a non-negative primitive matrix by power iteration,
/// stopping when the Collatz-Wielandt bounds agree to a relative `tol`.
double spectral_radius(const std::vector<int>& matrix, int dimension, double tol = 1e-10,
                       int max_iter = 1000000);

struct BifurcationSample {
  double c1;
  OrbitClass orbit_class;
  std::optional<int> period;
};

/// classify_orbit on `steps` evenly spaced thresholds from c1_lo to c1_hi
/// inclusive.
std::vector<BifurcationSample> bifurcation_scan(double c1_lo, double c1_hi, int steps,
                                                int max_iter = kDefaultMaxIter);

/// True when j (1 - c1) > 1 for some 1 <= j < N, so the in-phase central basin
/// component reaches the boundary of the cube.
bool central_component_reaches_boundary(const Threshold& t, int sites);

}  // namespace cascade
