#include "cascade/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>

#include "CLI11.hpp"
#include "cascade/parameter_analysis.hpp"

extern char** environ;

namespace cascade {

std::string_view to_string(Subcommand s) noexcept {
  switch (s) {
    case Subcommand::Orbit: return "orbit";
    case Subcommand::Stars: return "stars";
    case Subcommand::Scan: return "scan";
    case Subcommand::Basin: return "basin";
    case Subcommand::Census: return "census";
    case Subcommand::Markov: return "markov";
    case Subcommand::Measure: return "measure";
    case Subcommand::Accumulation: return "accumulation";
  }
  return "orbit";
}

namespace {

[[noreturn]] void bad_value(std::string_view key, const std::string& value, std::string_view why) {
  throw UsageError("invalid value '" + value + "' for " + std::string(key) + ": " + std::string(why));
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double to_double(std::string_view key, const std::string& v) {
  try {
    return parse_real(trim(v));
  } catch (const Error&) {
    bad_value(key, v, "expected a real number");
  }
}

long long to_integer(std::string_view key, const std::string& v) {
  const std::string s = trim(v);
  long long out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) bad_value(key, v, "expected an integer");
  return out;
}

int to_int(std::string_view key, const std::string& v) {
  const long long x = to_integer(key, v);
  if (x < -2147483647LL || x > 2147483647LL) bad_value(key, v, "integer out of range");
  return static_cast<int>(x);
}

std::uint64_t to_u64(std::string_view key, const std::string& v) {
  std::string s = trim(v);
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s = s.substr(2);
    base = 16;
  }
  s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out, base);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) bad_value(key, v, "expected an unsigned integer");
  return out;
}

bool to_bool(std::string_view key, const std::string& v) {
  std::string s = trim(v);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  bad_value(key, v, "expected true or false");
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> parts;
  std::string item;
  for (char ch : v) {
    if (ch == ',') {
      parts.push_back(trim(item));
      item.clear();
    } else {
      item += ch;
    }
  }
  parts.push_back(trim(item));
  return parts;
}

std::vector<double> to_reals(std::string_view key, const std::string& v) {
  std::vector<double> out;
  for (const auto& p : split_list(v)) out.push_back(to_double(key, p));
  return out;
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

struct KeySpec {
  std::string name;
  std::string help;
  bool is_flag;
  Setter apply;
};

const std::vector<KeySpec>& key_table() {
  static const std::vector<KeySpec> keys = {
      {"c1", "threshold c1 in (3/4, 1)", false, [](RunConfig& c, const std::string& v) { c.c1 = to_double("--c1", v); }},
      {"max-iter", "orbit classification iteration cap", false,
       [](RunConfig& c, const std::string& v) { c.max_iter = to_int("--max-iter", v); }},
      {"max-s", "largest star index", false, [](RunConfig& c, const std::string& v) { c.max_s = to_int("--max-s", v); }},
      {"lo", "scan lower threshold", false, [](RunConfig& c, const std::string& v) { c.lo = to_double("--lo", v); }},
      {"hi", "scan upper threshold", false, [](RunConfig& c, const std::string& v) { c.hi = to_double("--hi", v); }},
      {"steps", "scan sample count", false, [](RunConfig& c, const std::string& v) { c.steps = to_int("--steps", v); }},
      {"res", "grid resolution per axis", false,
       [](RunConfig& c, const std::string& v) { c.grid.resolution = to_int("--res", v); }},
      {"transient", "steps discarded before measuring", false,
       [](RunConfig& c, const std::string& v) {
         const long long x = to_integer("--transient", v);
         if (x < 0) bad_value("--transient", v, "must be >= 0");
         c.transient = static_cast<std::size_t>(x);
       }},
      {"window", "excess summation window", false,
       [](RunConfig& c, const std::string& v) {
         const long long x = to_integer("--window", v);
         if (x < 1) bad_value("--window", v, "must be >= 1");
         c.grid.window = static_cast<std::size_t>(x);
       }},
      {"format", "basin output: csv, pgm or ppm", false,
       [](RunConfig& c, const std::string& v) {
         const std::string s = trim(v);
         if (s == "csv") c.format = ImageFormat::Csv;
         else if (s == "pgm") c.format = ImageFormat::Pgm;
         else if (s == "ppm") c.format = ImageFormat::Ppm;
         else bad_value("--format", v, "expected csv, pgm or ppm");
       }},
      {"out", "output path (tables default to stdout)", false,
       [](RunConfig& c, const std::string& v) { c.output_path = trim(v); }},
      {"sites", "number of lattice sites N", false, [](RunConfig& c, const std::string& v) { c.sites = to_int("--sites", v); }},
      {"samples", "Monte Carlo sample count", false,
       [](RunConfig& c, const std::string& v) { c.samples = to_u64("--samples", v); }},
      {"seed", "master seed", false, [](RunConfig& c, const std::string& v) { c.seed = to_u64("--seed", v); }},
      {"max-period", "longest period searched", false,
       [](RunConfig& c, const std::string& v) { c.max_period = to_int("--max-period", v); }},
      {"n", "Markov partition size", false, [](RunConfig& c, const std::string& v) { c.markov_n = to_int("--n", v); }},
      {"j", "avoidance depth", false, [](RunConfig& c, const std::string& v) { c.j = to_int("--j", v); }},
      {"threads", "worker threads (0 = all cores)", false,
       [](RunConfig& c, const std::string& v) {
         const int x = to_int("--threads", v);
         if (x < 0) bad_value("--threads", v, "must be >= 0");
         c.threads = static_cast<unsigned>(x);
       }},
      {"corner", "count components at the cube corners", true,
       [](RunConfig& c, const std::string& v) { c.corner = to_bool("--corner", v); }},
      {"point", "interior point px,py", false,
       [](RunConfig& c, const std::string& v) {
         const auto xy = to_reals("--point", v);
         if (xy.size() != 2) bad_value("--point", v, "expected px,py");
         c.point = Point2{xy[0], xy[1]};
       }},
      {"eps", "corner box sizes", false, [](RunConfig& c, const std::string& v) { c.eps = to_reals("--eps", v); }},
      {"radii", "disk radii", false, [](RunConfig& c, const std::string& v) { c.radii = to_reals("--radii", v); }},
      {"resolutions", "resolutions for corner refinement", false,
       [](RunConfig& c, const std::string& v) {
         c.resolutions.clear();
         for (const auto& p : split_list(v)) c.resolutions.push_back(to_int("--resolutions", p));
       }},
      {"domain", "slice box x0,x1,y0,y1", false,
       [](RunConfig& c, const std::string& v) {
         const auto b = to_reals("--domain", v);
         if (b.size() != 4) bad_value("--domain", v, "expected x0,x1,y0,y1");
         c.grid.domain = Box{b[0], b[1], b[2], b[3]};
       }},
      {"pin", "values of sites 3..N", false,
       [](RunConfig& c, const std::string& v) { c.grid.pinned_sites = to_reals("--pin", v); }},
      {"extended", "classify by the window excess sequence", true,
       [](RunConfig& c, const std::string& v) { c.grid.extended_fingerprint = to_bool("--extended", v); }},
  };
  return keys;
}

const KeySpec* find_key(std::string_view name) {
  for (const auto& k : key_table()) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

struct SubcommandSpec {
  Subcommand id;
  const char* description;
  std::vector<std::string> keys;
};

const std::vector<SubcommandSpec>& subcommands() {
  static const std::vector<SubcommandSpec> subs = {
      {Subcommand::Orbit, "classify the orbit of the threshold", {"c1", "max-iter", "out"}},
      {Subcommand::Stars, "star values xi_s and their spacing ratios", {"max-s", "out"}},
      {Subcommand::Scan, "bifurcation scan of orbit classes", {"lo", "hi", "steps", "max-iter", "out"}},
      {Subcommand::Basin,
       "render a two-site basin slice",
       {"c1", "res", "transient", "window", "format", "out", "domain", "pin", "extended", "threads"}},
      {Subcommand::Census,
       "count attractors from random initial states",
       {"c1", "sites", "samples", "seed", "transient", "max-period", "out", "threads"}},
      {Subcommand::Markov, "Markov partition near 3/4 and its entropy bound", {"c1", "n", "out"}},
      {Subcommand::Measure, "Monte Carlo measure of points avoiding C", {"c1", "j", "samples", "seed", "out"}},
      {Subcommand::Accumulation,
       "component counts near the corners or an interior point",
       {"c1", "corner", "point", "eps", "radii", "resolutions", "res", "transient", "window", "domain", "threads",
        "out"}},
  };
  return subs;
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value, const std::string& origin) {
  const KeySpec* spec = find_key(key);
  if (!spec) throw UsageError(origin + ": unknown key '" + key + "'");
  spec->apply(cfg, value);
}

void apply_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path.string() + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = trim(line.substr(0, line.find('#')));
    if (s.empty()) continue;
    const auto eq = s.find('=');
    const std::string origin = path.string() + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw UsageError(origin + ": expected key = value");
    apply(cfg, trim(s.substr(0, eq)), trim(s.substr(eq + 1)), origin);
  }
}

std::string env_key(std::string_view name) {
  std::string key(name.substr(kEnvPrefix.size()));
  for (char& ch : key) {
    ch = ch == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return key;
}

void set_defaults(RunConfig& cfg) {
  switch (cfg.subcommand) {
    case Subcommand::Census:
      cfg.transient = 1000;
      cfg.samples = 10000;
      break;
    case Subcommand::Measure:
      cfg.samples = 1000000;
      break;
    default:
      cfg.transient = kDefaultTransient;
      cfg.samples = 1;
      break;
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void validate(RunConfig& cfg) {
  const Subcommand s = cfg.subcommand;
  const bool needs_c1 = s != Subcommand::Stars && s != Subcommand::Scan;
  if (needs_c1) {
    require(cfg.c1.has_value(), std::string(to_string(s)) + " requires --c1");
    require(*cfg.c1 > 0.75 && *cfg.c1 < 1.0, "--c1 must lie in (3/4, 1)");
  }
  switch (s) {
    case Subcommand::Orbit:
      require(cfg.max_iter >= 1, "--max-iter must be >= 1");
      break;
    case Subcommand::Stars:
      require(cfg.max_s >= 2 && cfg.max_s <= 12, "--max-s must lie in [2, 12]");
      break;
    case Subcommand::Scan:
      require(cfg.lo > 0.75 && cfg.lo < cfg.hi && cfg.hi < 1.0, "scan needs 3/4 < --lo < --hi < 1");
      require(cfg.steps >= 1, "--steps must be >= 1");
      require(cfg.max_iter >= 1, "--max-iter must be >= 1");
      break;
    case Subcommand::Basin:
    case Subcommand::Accumulation:
      cfg.grid.transient = cfg.transient;
      try {
        cfg.grid.validate();
      } catch (const ParameterError& e) {
        throw UsageError(e.what());
      }
      if (s == Subcommand::Accumulation) {
        require(cfg.corner != cfg.point.has_value(), "accumulation needs exactly one of --corner or --point");
        if (cfg.point) {
          require(cfg.point->x > 0.0 && cfg.point->x < 1.0 && cfg.point->y > 0.0 && cfg.point->y < 1.0,
                  "--point must lie in (0,1)^2");
          require(!cfg.radii.empty(), "--radii must not be empty");
        } else {
          require(!cfg.eps.empty() && !cfg.resolutions.empty(), "--eps and --resolutions must not be empty");
          for (int r : cfg.resolutions) require(r >= 2, "--resolutions entries must be >= 2");
          for (double e : cfg.eps) require(e > 0.0 && e <= 0.5, "--eps entries must lie in (0, 1/2]");
        }
      }
      cfg.sites = static_cast<int>(cfg.grid.sites());
      break;
    case Subcommand::Census:
      require(cfg.sites >= 1, "--sites must be >= 1");
      require(cfg.samples >= 1, "--samples must be >= 1");
      require(cfg.max_period >= 1, "--max-period must be >= 1");
      break;
    case Subcommand::Markov: {
      require(*cfg.c1 > kStarTwo, "markov needs --c1 above xi_2 = 0.933012702");
      const int n0 = markov_base_index(Threshold(*cfg.c1));
      if (!cfg.markov_n) cfg.markov_n = n0 + 4;
      require(*cfg.markov_n >= n0 + 1, "--n must be >= n0 + 1 = " + std::to_string(n0 + 1));
      break;
    }
    case Subcommand::Measure:
      require(cfg.j >= 0, "--j must be >= 0");
      require(cfg.samples >= 1, "--samples must be >= 1");
      break;
  }
}

}  // namespace

RunConfig parse_config(std::span<const std::string> argv, const std::map<std::string, std::string>& env,
                       const std::optional<std::filesystem::path>& file) {
  CLI::App app{"Threshold-coupled logistic map lattices", "cascade"};
  app.require_subcommand(1);
  std::string config_flag;
  app.add_option("--config", config_flag, "key = value configuration file");

  std::map<std::string, std::string> flags;
  std::map<CLI::App*, Subcommand> sub_ids;
  for (const auto& sub : subcommands()) {
    CLI::App* cmd = app.add_subcommand(std::string(to_string(sub.id)), sub.description);
    cmd->fallthrough();
    sub_ids[cmd] = sub.id;
    for (const auto& key : sub.keys) {
      const KeySpec* spec = find_key(key);
      if (spec->is_flag) {
        cmd->add_flag_callback("--" + key, [&flags, key] { flags[key] = "true"; }, spec->help);
      } else {
        cmd->add_option_function<std::string>(
            "--" + key, [&flags, key](const std::string& v) { flags[key] = v; }, spec->help);
      }
    }
  }

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig cfg;
  for (const auto& [cmd, id] : sub_ids) {
    if (cmd->parsed()) cfg.subcommand = id;
  }
  set_defaults(cfg);

  std::optional<std::filesystem::path> config_path = file;
  if (!config_path && !config_flag.empty()) config_path = config_flag;
  if (!config_path) {
    if (auto it = env.find("CASCADE_CONFIG"); it != env.end() && !it->second.empty()) config_path = it->second;
  }
  if (config_path) apply_file(cfg, *config_path);

  for (const auto& [name, value] : env) {
    if (name.rfind(kEnvPrefix, 0) != 0 || name == "CASCADE_CONFIG") continue;
    apply(cfg, env_key(name), value, "environment variable " + name);
  }
  for (const auto& [key, value] : flags) apply(cfg, key, value, "--" + key);

  validate(cfg);
  return cfg;
}

std::map<std::string, std::string> cascade_environment() {
  std::map<std::string, std::string> out;
  for (char** e = environ; e && *e; ++e) {
    const std::string_view entry(*e);
    if (entry.rfind(kEnvPrefix, 0) != 0) continue;
    const auto eq = entry.find('=');
    if (eq == std::string_view::npos) continue;
    out.emplace(std::string(entry.substr(0, eq)), std::string(entry.substr(eq + 1)));
  }
  return out;
}

}  // namespace cascade
