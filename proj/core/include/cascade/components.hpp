#pragma once

// 4-connected component labelling of basin class maps, and counts of the
// components that meet small boxes at the cube corners or disks around an
// interior point. Growth of those counts under refinement is the raster
// proxy for basin components accumulating there.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cascade/basin.hpp"

namespace cascade {

struct ComponentLabels {
  int rows = 0;
  int cols = 0;
  /// Component id per cell, dense 0..count-1 in raster order of first cell.
  std::vector<std::uint32_t> ids;
  std::uint32_t count = 0;
  /// Class of each component.
  std::vector<std::uint32_t> component_class;
  /// Number of components per class id.
  std::vector<std::uint32_t> per_class;
};

/// Two-pass union-find labelling; cells join when they share an edge and a
/// class.
ComponentLabels label_components(std::span<const std::uint32_t> classes, int rows, int cols);

struct Point2 {
  double x;
  double y;
};

struct AccumulationQuery {
  std::vector<double> corner_eps;
  std::optional<Point2> point;
  std::vector<double> radii;
};

/// Corners in the order (0,0), (1,0), (0,1), (1,1).
struct CornerCount {
  double eps;
  std::array<std::uint32_t, 4> per_corner;
};

struct DiskCount {
  double radius;
  std::uint32_t count;
};

struct ComponentStats {
  ComponentLabels labels;
  std::vector<CornerCount> corners;
  std::vector<DiskCount> disks;
};

ComponentStats label_components(const BasinGrid& grid, const AccumulationQuery& query = {});

/// Distinct components with a cell centre inside `box`.
std::uint32_t components_in_box(const ComponentLabels& labels, const BasinGrid& grid, const Box& box);
/// Distinct components with a cell centre within `radius` of `centre`.
std::uint32_t components_in_disk(const ComponentLabels& labels, const BasinGrid& grid, Point2 centre,
                                 double radius);
/// Corner boxes [0,eps]^2 and their mirror images at the other three corners.
CornerCount corner_counts(const ComponentLabels& labels, const BasinGrid& grid, double eps);

struct CornerAccumulationRow {
  int resolution;
  double eps;
  std::array<std::uint32_t, 4> per_corner;
  std::uint32_t classes;
  std::uint32_t components;
};

/// Renders at each resolution and counts components meeting each corner box.
std::vector<CornerAccumulationRow> corner_accumulation(const Threshold& t, const GridSpec& base_spec,
                                                       const std::vector<double>& eps_list,
                                                       const std::vector<int>& resolutions,
                                                       unsigned workers = 0);

struct InteriorAccumulationRow {
  int resolution;
  double radius;
  std::uint32_t count;
  std::uint32_t components;
};

/// Counts components meeting disks of the given radii around `point`.
std::vector<InteriorAccumulationRow> interior_accumulation(const Threshold& t, const GridSpec& spec,
                                                           Point2 point, const std::vector<double>& radii,
                                                           unsigned workers = 0);

}  // namespace cascade
