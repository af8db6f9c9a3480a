#include "cascade/commands.hpp"

#include <ostream>

#include "cascade/attractors.hpp"
#include "cascade/basin.hpp"
#include "cascade/components.hpp"
#include "cascade/io.hpp"
#include "cascade/parameter_analysis.hpp"
#include "cascade/scalar_dynamics.hpp"

namespace cascade {

namespace {

void emit(const Table& table, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output_path) {
    write_csv(table, *cfg.output_path);
  } else {
    write_csv(table, out);
  }
}

std::filesystem::path default_image_path(ImageFormat format) {
  switch (format) {
    case ImageFormat::Csv: return "basin.csv";
    case ImageFormat::Pgm: return "basin.pgm";
    case ImageFormat::Ppm: break;
  }
  return "basin.ppm";
}

int run_orbit(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const Threshold t(*cfg.c1);
  const OrbitClass cls = classify_orbit(t, cfg.max_iter);
  const int shown = std::min(cfg.max_iter, std::max(period_of(cls) + 1, 32));
  emit(orbit_table(forward_orbit(t, shown)), cfg, out);
  log << "c1 = " << format_real(t.c1()) << ": " << describe(cls) << '\n';
  log << "C = [" << format_real(t.c0()) << ", " << format_real(t.c_hi()) << "], c2 = " << format_real(t.c2())
      << '\n';
  return 0;
}

int run_stars(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto stars = star_values(cfg.max_s);
  emit(star_table(stars), cfg, out);
  log << stars.size() << " star values; spacing ratios approach 1/4\n";
  return 0;
}

int run_scan(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto samples = bifurcation_scan(cfg.lo, cfg.hi, cfg.steps, cfg.max_iter);
  emit(scan_table(samples), cfg, out);
  std::size_t stable = 0;
  for (const auto& s : samples) stable += s.period.has_value();
  log << stable << " of " << samples.size() << " thresholds are super-stable\n";
  return 0;
}

int run_basin(const RunConfig& cfg, std::ostream& log) {
  const Threshold t(*cfg.c1);
  const BasinGrid grid = render_basins(t, cfg.grid, cfg.threads);
  const auto path = cfg.output_path.value_or(default_image_path(cfg.format));
  write_image(grid, path, cfg.format);
  const ComponentLabels labels = label_components(grid.classes, grid.rows(), grid.cols());
  log << grid.rows() << "x" << grid.cols() << " grid, " << grid.class_count() << " classes, " << labels.count
      << " components -> " << path.string() << '\n';
  for (std::size_t k = 0; k < grid.class_table.size(); ++k) {
    log << "  class " << k << ": fingerprint " << format_real(grid.class_table[k]) << '\n';
  }
  return 0;
}

int run_census(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const Threshold t(*cfg.c1);
  CensusOptions options;
  options.transient = cfg.transient;
  options.max_period = cfg.max_period;
  options.workers = cfg.threads;
  const CensusResult result =
      census(t, static_cast<std::size_t>(cfg.sites), static_cast<std::size_t>(cfg.samples), cfg.seed, options);
  emit(census_table(result), cfg, out);
  log << result.attractors.size() << " attractors (" << result.nontrivial_count() << " non-trivial) from "
      << result.samples << " samples, " << result.unresolved << " unresolved\n";
  return 0;
}

int run_markov(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const MarkovModel model = build_markov(Threshold(*cfg.c1), *cfg.markov_n);
  emit(markov_table(model), cfg, out);
  log << "n0 = " << model.n0 << ", n = " << model.dimension - 1 << ", spectral radius "
      << format_real(model.spectral_radius) << ", entropy bound " << format_real(model.entropy_bound()) << '\n';
  return 0;
}

int run_measure(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const Threshold t(*cfg.c1);
  const AvoidanceEstimate est = estimate_avoidance(t, cfg.j, cfg.samples, cfg.seed);
  Table table{{"j", "samples", "fraction", "standard_error", "tent_measure"}, {}};
  table.rows.push_back({std::int64_t{cfg.j}, static_cast<std::int64_t>(est.samples), est.fraction,
                        est.standard_error, avoidance_measure_tent(t, cfg.j)});
  emit(table, cfg, out);
  log << "m(R_" << cfg.j << ") ~ " << format_real(est.fraction) << " +/- " << format_real(est.standard_error)
      << '\n';
  return 0;
}

int run_accumulation(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const Threshold t(*cfg.c1);
  if (cfg.point) {
    const auto rows = interior_accumulation(t, cfg.grid, *cfg.point, cfg.radii, cfg.threads);
    emit(interior_table(rows), cfg, out);
    log << "disk counts around (" << format_real(cfg.point->x) << ", " << format_real(cfg.point->y) << ") at R = "
        << cfg.grid.resolution << '\n';
  } else {
    const auto rows = corner_accumulation(t, cfg.grid, cfg.eps, cfg.resolutions, cfg.threads);
    emit(corner_table(rows), cfg, out);
    log << rows.size() << " corner rows\n";
  }
  return 0;
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  switch (cfg.subcommand) {
    case Subcommand::Orbit: return run_orbit(cfg, out, log);
    case Subcommand::Stars: return run_stars(cfg, out, log);
    case Subcommand::Scan: return run_scan(cfg, out, log);
    case Subcommand::Basin: return run_basin(cfg, log);
    case Subcommand::Census: return run_census(cfg, out, log);
    case Subcommand::Markov: return run_markov(cfg, out, log);
    case Subcommand::Measure: return run_measure(cfg, out, log);
    case Subcommand::Accumulation: return run_accumulation(cfg, out, log);
  }
  return 3;
}

}  // namespace cascade
