#include "cascade/components.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cascade/errors.hpp"

namespace cascade {

namespace {

class DisjointSets {
public:
  std::uint32_t make() {
    parent_.push_back(static_cast<std::uint32_t>(parent_.size()));
    return parent_.back();
  }

  std::uint32_t find(std::uint32_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Smaller root wins so provisional order is preserved.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

ComponentLabels label_components(std::span<const std::uint32_t> classes, int rows, int cols) {
  if (rows < 0 || cols < 0 || classes.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw ParameterError("label_components: class map size does not match rows x cols");
  }
  ComponentLabels out;
  out.rows = rows;
  out.cols = cols;
  out.ids.assign(classes.size(), 0);

  DisjointSets sets;
  const auto at = [cols](int r, int c) { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c); };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const std::size_t k = at(r, c);
      const bool left = c > 0 && classes[at(r, c - 1)] == classes[k];
      const bool up = r > 0 && classes[at(r - 1, c)] == classes[k];
      if (left && up) {
        out.ids[k] = out.ids[at(r, c - 1)];
        sets.unite(out.ids[k], out.ids[at(r - 1, c)]);
      } else if (left) {
        out.ids[k] = out.ids[at(r, c - 1)];
      } else if (up) {
        out.ids[k] = out.ids[at(r - 1, c)];
      } else {
        out.ids[k] = sets.make();
      }
    }
  }

  // Second pass: resolve roots and renumber densely in raster order.
  std::vector<std::uint32_t> dense;
  constexpr std::uint32_t kUnset = ~0u;
  for (std::size_t k = 0; k < out.ids.size(); ++k) {
    const std::uint32_t root = sets.find(out.ids[k]);
    if (root >= dense.size()) dense.resize(root + 1, kUnset);
    if (dense[root] == kUnset) {
      dense[root] = out.count++;
      out.component_class.push_back(classes[k]);
    }
    out.ids[k] = dense[root];
  }

  const std::uint32_t max_class = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end());
  out.per_class.assign(classes.empty() ? 0 : max_class + 1, 0);
  for (std::uint32_t cls : out.component_class) ++out.per_class[cls];
  return out;
}

namespace {

template <class Pred>
std::uint32_t count_components_where(const ComponentLabels& labels, const BasinGrid& grid, Pred inside) {
  std::set<std::uint32_t> seen;
  for (int r = 0; r < grid.rows(); ++r) {
    const double y = grid.spec.cell_y(r);
    for (int c = 0; c < grid.cols(); ++c) {
      if (inside(grid.spec.cell_x(c), y)) seen.insert(labels.ids[grid.index(r, c)]);
    }
  }
  return static_cast<std::uint32_t>(seen.size());
}

}  // namespace

std::uint32_t components_in_box(const ComponentLabels& labels, const BasinGrid& grid, const Box& box) {
  return count_components_where(labels, grid, [&](double x, double y) { return box.contains(x, y); });
}

std::uint32_t components_in_disk(const ComponentLabels& labels, const BasinGrid& grid, Point2 centre,
                                 double radius) {
  const double r2 = radius * radius;
  return count_components_where(labels, grid, [&](double x, double y) {
    const double dx = x - centre.x;
    const double dy = y - centre.y;
    return dx * dx + dy * dy <= r2;
  });
}

CornerCount corner_counts(const ComponentLabels& labels, const BasinGrid& grid, double eps) {
  const double lo = eps;
  const double hi = 1.0 - eps;
  return {eps,
          {components_in_box(labels, grid, {0.0, lo, 0.0, lo}), components_in_box(labels, grid, {hi, 1.0, 0.0, lo}),
           components_in_box(labels, grid, {0.0, lo, hi, 1.0}), components_in_box(labels, grid, {hi, 1.0, hi, 1.0})}};
}

ComponentStats label_components(const BasinGrid& grid, const AccumulationQuery& query) {
  ComponentStats stats{label_components(grid.classes, grid.rows(), grid.cols()), {}, {}};
  for (double eps : query.corner_eps) stats.corners.push_back(corner_counts(stats.labels, grid, eps));
  if (query.point) {
    for (double r : query.radii) stats.disks.push_back({r, components_in_disk(stats.labels, grid, *query.point, r)});
  }
  return stats;
}

std::vector<CornerAccumulationRow> corner_accumulation(const Threshold& t, const GridSpec& base_spec,
                                                       const std::vector<double>& eps_list,
                                                       const std::vector<int>& resolutions, unsigned workers) {
  std::vector<CornerAccumulationRow> rows;
  for (int res : resolutions) {
    GridSpec spec = base_spec;
    spec.resolution = res;
    const BasinGrid grid = render_basins(t, spec, workers);
    const ComponentLabels labels = label_components(grid.classes, grid.rows(), grid.cols());
    for (double eps : eps_list) {
      const CornerCount cc = corner_counts(labels, grid, eps);
      rows.push_back({res, eps, cc.per_corner, static_cast<std::uint32_t>(grid.class_count()), labels.count});
    }
  }
  return rows;
}

std::vector<InteriorAccumulationRow> interior_accumulation(const Threshold& t, const GridSpec& spec,
                                                           Point2 point, const std::vector<double>& radii,
                                                           unsigned workers) {
  if (!(point.x > 0.0 && point.x < 1.0 && point.y > 0.0 && point.y < 1.0)) {
    throw ParameterError("interior_accumulation: point must lie in (0,1)^2");
  }
  const BasinGrid grid = render_basins(t, spec, workers);
  const ComponentLabels labels = label_components(grid.classes, grid.rows(), grid.cols());
  std::vector<InteriorAccumulationRow> rows;
  for (double r : radii) rows.push_back({spec.resolution, r, components_in_disk(labels, grid, point, r), labels.count});
  return rows;
}

}  // namespace cascade
