#pragma once

// Basin-of-attraction rendering on a 2-D slice of initial conditions. Each
// cell is started at its centre, run for a transient, and fingerprinted by the
// excess summed over a window. Equal fingerprints (within 1e-6) share a class.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cascade/lattice.hpp"

namespace cascade {

inline constexpr int kDefaultResolution = 499;
inline constexpr std::size_t kDefaultTransient = 100;
inline constexpr std::size_t kDefaultWindow = 12;
inline constexpr double kBucketTol = 1e-6;
/// Quantum used by the extended (sequence) fingerprint.
inline constexpr double kExcessQuantum = 1e-6;

/// Axis-aligned box [x_lo, x_hi] x [y_lo, y_hi].
struct Box {
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;

  bool contains(double x, double y) const noexcept { return x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi; }
};

struct GridSpec {
  int resolution = kDefaultResolution;
  /// Slice of (site 1, site 2) initial values.
  Box domain;
  /// Values of sites 3..N, held fixed across the slice.
  std::vector<double> pinned_sites;
  std::size_t transient = kDefaultTransient;
  std::size_t window = kDefaultWindow;
  /// Classify by the quantised, phase-minimised window sequence instead of
  /// its sum. Separates attractors whose sums coincide.
  bool extended_fingerprint = false;

  std::size_t sites() const noexcept { return 2 + pinned_sites.size(); }
  /// Throws ParameterError on an invalid spec.
  void validate() const;

  /// Centre of column `col` (x) and row `row` (y).
  double cell_x(int col) const noexcept;
  double cell_y(int row) const noexcept;
  LatticeState cell_state(int row, int col) const;
};

/// Row-major grid; row r holds initial y = cell_y(r), column c initial x.
struct BasinGrid {
  GridSpec spec;
  std::vector<double> fingerprints;
  std::vector<std::uint32_t> classes;
  /// Representative (smallest) fingerprint of each class, ascending.
  std::vector<double> class_table;

  int rows() const noexcept { return spec.resolution; }
  int cols() const noexcept { return spec.resolution; }
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(spec.resolution) + static_cast<std::size_t>(col);
  }
  double fingerprint(int row, int col) const noexcept { return fingerprints[index(row, col)]; }
  std::uint32_t class_at(int row, int col) const noexcept { return classes[index(row, col)]; }
  std::size_t class_count() const noexcept { return class_table.size(); }
};

/// Renders the basin slice. Output is bit-identical for any worker count.
BasinGrid render_basins(const Threshold& t, const GridSpec& spec, unsigned workers = 0);

struct Bucketing {
  std::vector<std::uint32_t> classes;
  std::vector<double> representatives;
};

/// Groups values into classes: sorted values open a new class when they exceed
/// the current class's smallest member by more than tol. Ids ascend with value.
Bucketing bucket_fingerprints(const std::vector<double>& values, double tol = kBucketTol);

}  // namespace cascade
