#include "cascade/basin.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "cascade/errors.hpp"
#include "cascade/parallel.hpp"

namespace cascade {

void GridSpec::validate() const {
  if (resolution < 2) throw ParameterError("grid resolution must be >= 2");
  const auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!(in_unit(domain.x_lo) && in_unit(domain.x_hi) && in_unit(domain.y_lo) && in_unit(domain.y_hi)) ||
      !(domain.x_lo < domain.x_hi && domain.y_lo < domain.y_hi)) {
    throw ParameterError("grid domain must be a non-empty box inside [0,1]^2");
  }
  if (window < 1) throw ParameterError("grid window must be >= 1");
  for (double v : pinned_sites) {
    if (!in_unit(v)) throw ParameterError("pinned site value " + std::to_string(v) + " is outside [0, 1]");
  }
}

namespace {
double unit_centre(int k, int resolution) {
  return static_cast<double>(2 * k + 1) / static_cast<double>(2 * resolution);
}

// Lower-half centres are taken as 1 - (mirror centre). That subtraction is
// exact for values in [1/2, 1], so mirrored cells get bit-identical logistic
// images and the x -> 1 - x symmetry survives rounding.
double cell_centre(double lo, double hi, int k, int resolution) {
  const double u = 2 * k + 1 < resolution ? 1.0 - unit_centre(resolution - 1 - k, resolution)
                                          : unit_centre(k, resolution);
  return lo + (hi - lo) * u;
}
}  // namespace

double GridSpec::cell_x(int col) const noexcept { return cell_centre(domain.x_lo, domain.x_hi, col, resolution); }
double GridSpec::cell_y(int row) const noexcept { return cell_centre(domain.y_lo, domain.y_hi, row, resolution); }

LatticeState GridSpec::cell_state(int row, int col) const {
  std::vector<double> sites;
  sites.reserve(this->sites());
  sites.push_back(cell_x(col));
  sites.push_back(cell_y(row));
  sites.insert(sites.end(), pinned_sites.begin(), pinned_sites.end());
  return LatticeState(std::move(sites));
}

Bucketing bucket_fingerprints(const std::vector<double>& values, double tol) {
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Bucketing out;
  for (double v : sorted) {
    if (out.representatives.empty() || v - out.representatives.back() > tol) out.representatives.push_back(v);
  }
  out.classes.reserve(values.size());
  for (double v : values) {
    const auto it = std::upper_bound(out.representatives.begin(), out.representatives.end(), v);
    out.classes.push_back(static_cast<std::uint32_t>(it - out.representatives.begin() - 1));
  }
  return out;
}

namespace {

using Sequence = std::vector<long long>;

Sequence least_rotation(const Sequence& s) {
  Sequence best = s;
  Sequence candidate(s.size());
  for (std::size_t r = 1; r < s.size(); ++r) {
    std::rotate_copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(r), s.end(), candidate.begin());
    if (candidate < best) best = candidate;
  }
  return best;
}

// Classes keyed by the phase-minimised quantised sequence, ordered by
// (representative sum, sequence).
void classify_sequences(BasinGrid& grid, const std::vector<Sequence>& sequences) {
  std::map<Sequence, double> first_sum;
  for (std::size_t k = 0; k < sequences.size(); ++k) first_sum.emplace(sequences[k], grid.fingerprints[k]);

  std::vector<std::pair<double, const Sequence*>> order;
  order.reserve(first_sum.size());
  for (const auto& [seq, sum] : first_sum) order.emplace_back(sum, &seq);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::map<Sequence, std::uint32_t> id;
  for (const auto& [sum, seq] : order) {
    id.emplace(*seq, static_cast<std::uint32_t>(grid.class_table.size()));
    grid.class_table.push_back(sum);
  }
  grid.classes.resize(sequences.size());
  for (std::size_t k = 0; k < sequences.size(); ++k) grid.classes[k] = id.at(sequences[k]);
}

}  // namespace

BasinGrid render_basins(const Threshold& t, const GridSpec& spec, unsigned workers) {
  spec.validate();
  const int res = spec.resolution;
  const std::size_t cells = static_cast<std::size_t>(res) * static_cast<std::size_t>(res);

  BasinGrid grid;
  grid.spec = spec;
  grid.fingerprints.assign(cells, 0.0);
  std::vector<Sequence> sequences(spec.extended_fingerprint ? cells : 0);

  const double c1 = t.c1();
  parallel_for(static_cast<std::size_t>(res), workers, [&](std::size_t row) {
    std::vector<double> sites(spec.sites());
    for (int col = 0; col < res; ++col) {
      sites[0] = spec.cell_x(col);
      sites[1] = spec.cell_y(static_cast<int>(row));
      std::copy(spec.pinned_sites.begin(), spec.pinned_sites.end(), sites.begin() + 2);
      for (std::size_t i = 0; i < spec.transient; ++i) step_in_place(sites, c1);

      const std::size_t k = grid.index(static_cast<int>(row), col);
      double sum = 0.0;
      if (spec.extended_fingerprint) {
        Sequence seq(spec.window);
        for (auto& q : seq) {
          const double e = step_in_place(sites, c1);
          sum += e;
          q = std::llround(e / kExcessQuantum);
        }
        sequences[k] = least_rotation(seq);
      } else {
        for (std::size_t i = 0; i < spec.window; ++i) sum += step_in_place(sites, c1);
      }
      grid.fingerprints[k] = sum;
    }
  });

  if (spec.extended_fingerprint) {
    classify_sequences(grid, sequences);
  } else {
    Bucketing b = bucket_fingerprints(grid.fingerprints);
    grid.classes = std::move(b.classes);
    grid.class_table = std::move(b.representatives);
  }
  return grid;
}

}  // namespace cascade
