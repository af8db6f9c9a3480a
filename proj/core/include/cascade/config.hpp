#pragma once

// Run configuration for the `cascade` tool. Values are layered
// defaults < config file < CASCADE_* environment < command-line flags.
// The config file holds `key = value` lines with `#` comments; keys are the
// long flag names without dashes, e.g. `max-iter = 500`.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/basin.hpp"
#include "cascade/components.hpp"
#include "cascade/errors.hpp"
#include "cascade/io.hpp"
#include "cascade/random.hpp"

namespace cascade {

enum class Subcommand { Orbit, Stars, Scan, Basin, Census, Markov, Measure, Accumulation };

std::string_view to_string(Subcommand s) noexcept;

struct RunConfig {
  Subcommand subcommand = Subcommand::Orbit;
  std::optional<double> c1;
  int sites = 2;
  int max_iter = kDefaultMaxIter;
  int max_s = 8;
  double lo = 0.751;
  double hi = 0.999;
  int steps = 200;
  /// Resolution, domain, pinned sites, transient and window for basin runs.
  GridSpec grid;
  std::uint64_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  std::size_t transient = 0;
  int max_period = 256;
  std::optional<int> markov_n;
  int j = 10;
  std::optional<std::filesystem::path> output_path;
  ImageFormat format = ImageFormat::Ppm;
  unsigned threads = 0;
  bool corner = false;
  std::optional<Point2> point;
  std::vector<double> eps{0.1, 0.05, 0.025};
  std::vector<double> radii{0.01, 0.02, 0.05, 0.1, 0.2};
  std::vector<int> resolutions{125, 249, 499};
};

/// Thrown for --help; carries the help text. Not an error exit.
class HelpRequested : public Error {
public:
  using Error::Error;
};

/// Environment prefix for configuration keys, e.g. CASCADE_C1, CASCADE_MAX_ITER.
inline constexpr std::string_view kEnvPrefix = "CASCADE_";

/// Parses argv (without the program name). `env` holds environment entries;
/// only names starting with CASCADE_ are read, and an unknown one is an error.
/// The config file is `file` if given, else --config, else CASCADE_CONFIG.
/// Throws UsageError on any unknown key or out-of-range value.
RunConfig parse_config(std::span<const std::string> argv, const std::map<std::string, std::string>& env = {},
                       const std::optional<std::filesystem::path>& file = std::nullopt);

/// Environment variables of the current process with the CASCADE_ prefix.
std::map<std::string, std::string> cascade_environment();

}  // namespace cascade
