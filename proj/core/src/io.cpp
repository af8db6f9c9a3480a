#include "cascade/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "cascade/errors.hpp"

namespace cascade {

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  if (ec != std::errc{}) throw Error("format_real: conversion failed");
  return {buf.data(), end};
}

double parse_real(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw Error("not a real number: '" + text + "'");
  return value;
}

namespace {

std::string quote_if_needed(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else {
          return quote_if_needed(v);
        }
      },
      cell);
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << fields[i];
  }
  out << '\n';
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += ch;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    const std::error_code ec(errno, std::generic_category());
    throw IoError("cannot open '" + path.string() + "' for writing: " + ec.message());
  }
  return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  std::vector<std::string> fields;
  fields.reserve(table.header.size());
  for (const auto& h : table.header) fields.push_back(quote_if_needed(h));
  write_row(out, fields);
  for (const auto& row : table.rows) {
    fields.clear();
    for (const auto& cell : row) fields.push_back(render_cell(cell));
    write_row(out, fields);
  }
}

void write_csv(const Table& table, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_csv(table, out);
  finish_write(out, path);
}

CsvData read_csv(std::istream& in) {
  CsvData data;
  std::string line;
  if (!std::getline(in, line)) return data;
  data.header = split_csv_line(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    data.rows.push_back(split_csv_line(line));
  }
  return data;
}

CsvData read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_csv(in);
}

const std::array<Rgb, 12>& colour_wheel() noexcept {
  static constexpr std::array<Rgb, 12> wheel{{
      {255, 0, 0},    {255, 128, 0}, {255, 255, 0}, {128, 255, 0}, {0, 255, 0},   {0, 255, 128},
      {0, 255, 255},  {0, 128, 255}, {0, 0, 255},   {128, 0, 255}, {255, 0, 255}, {255, 0, 128},
  }};
  return wheel;
}

Rgb palette_colour(std::uint32_t k, std::size_t count) noexcept {
  constexpr int kBlue = 8;
  if (count <= 1) return colour_wheel()[kBlue];
  const double frac = static_cast<double>(k) / static_cast<double>(count - 1);
  const int pos = kBlue - static_cast<int>(std::lround(kBlue * frac));
  return colour_wheel()[static_cast<std::size_t>(pos)];
}

std::uint8_t grey_level(std::uint32_t k, std::size_t count) noexcept {
  if (count <= 1) return 0;
  return static_cast<std::uint8_t>(std::lround(255.0 * k / static_cast<double>(count - 1)));
}

namespace {
std::vector<std::uint8_t> header_bytes(const char* magic, int rows, int cols) {
  const std::string h = std::string(magic) + "\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n255\n";
  return {h.begin(), h.end()};
}

void check_dims(std::span<const std::uint32_t> classes, int rows, int cols) {
  if (rows < 1 || cols < 1 || classes.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw Error("image dimensions do not match the class map");
  }
}
}  // namespace

std::vector<std::uint8_t> encode_pgm(std::span<const std::uint32_t> classes, int rows, int cols, std::size_t class_count) {
  check_dims(classes, rows, cols);
  auto bytes = header_bytes("P5", rows, cols);
  bytes.reserve(bytes.size() + classes.size());
  for (std::uint32_t k : classes) bytes.push_back(grey_level(k, class_count));
  return bytes;
}

std::vector<std::uint8_t> encode_ppm(std::span<const std::uint32_t> classes, int rows, int cols, std::size_t class_count) {
  check_dims(classes, rows, cols);
  auto bytes = header_bytes("P6", rows, cols);
  bytes.reserve(bytes.size() + 3 * classes.size());
  for (std::uint32_t k : classes) {
    const Rgb c = palette_colour(k, class_count);
    bytes.insert(bytes.end(), c.begin(), c.end());
  }
  return bytes;
}

void write_bytes(const std::vector<std::uint8_t>& bytes, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  finish_write(out, path);
}

void write_image(const BasinGrid& grid, const std::filesystem::path& path, ImageFormat format) {
  switch (format) {
    case ImageFormat::Csv:
      write_csv(fingerprint_table(grid), path);
      return;
    case ImageFormat::Pgm:
      write_bytes(encode_pgm(grid.classes, grid.rows(), grid.cols(), grid.class_count()), path);
      return;
    case ImageFormat::Ppm:
      write_bytes(encode_ppm(grid.classes, grid.rows(), grid.cols(), grid.class_count()), path);
      return;
  }
}

std::string describe(const OrbitClass& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SuperStable>) {
          return "super-stable period " + std::to_string(v.period) + " (enters C after " +
                 std::to_string(v.steps_to_c) + " steps)";
        } else if constexpr (std::is_same_v<T, Repeller>) {
          return "repeller (no entry into C within " + std::to_string(v.iterations_checked) + " steps)";
        } else {
          return "boundary (orbit meets the edge of C at step " + std::to_string(v.step) + ")";
        }
      },
      c);
}

namespace {
std::string class_tag(const OrbitClass& c) {
  if (std::holds_alternative<SuperStable>(c)) return "superstable";
  if (std::holds_alternative<Repeller>(c)) return "repeller";
  return "boundary";
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }
}  // namespace

Table orbit_table(const std::vector<ThresholdStep>& orbit) {
  Table t{{"k", "value", "excess"}, {}};
  for (std::size_t k = 0; k < orbit.size(); ++k) t.rows.push_back({as_int(k + 1), orbit[k].state, orbit[k].excess});
  return t;
}

Table star_table(const std::vector<StarValue>& stars) {
  Table t{{"s", "xi", "spacing_ratio"}, {}};
  for (std::size_t i = 0; i < stars.size(); ++i) {
    Cell ratio = std::string{};
    if (i >= 2) ratio = (stars[i].value - stars[i - 1].value) / (stars[i - 1].value - stars[i - 2].value);
    t.rows.push_back({std::int64_t{stars[i].s}, stars[i].value, ratio});
  }
  return t;
}

Table scan_table(const std::vector<BifurcationSample>& samples) {
  Table t{{"c1", "class", "period"}, {}};
  for (const auto& s : samples) {
    t.rows.push_back({s.c1, class_tag(s.orbit_class), std::int64_t{s.period.value_or(0)}});
  }
  return t;
}

Table fingerprint_table(const BasinGrid& grid) {
  Table t{{"row", "col", "x", "y", "fingerprint", "class"}, {}};
  t.rows.reserve(grid.fingerprints.size());
  for (int r = 0; r < grid.rows(); ++r) {
    for (int c = 0; c < grid.cols(); ++c) {
      t.rows.push_back({std::int64_t{r}, std::int64_t{c}, grid.spec.cell_x(c), grid.spec.cell_y(r),
                        grid.fingerprint(r, c), std::int64_t{grid.class_at(r, c)}});
    }
  }
  return t;
}

Table census_table(const CensusResult& result) {
  Table t{{"rank", "hits", "period", "type", "fingerprint", "state"}, {}};
  for (std::size_t i = 0; i < result.attractors.size(); ++i) {
    const auto& e = result.attractors[i];
    std::string state;
    for (double v : e.attractor.orbit.front()) {
      if (!state.empty()) state += ' ';
      state += format_real(v);
    }
    t.rows.push_back({as_int(i + 1), as_int(e.hits), std::int64_t{e.attractor.period},
                      std::string(to_string(e.attractor.type)), e.attractor.window_fingerprint, state});
  }
  return t;
}

Table markov_table(const MarkovModel& model) {
  Table t{{"index", "lo", "hi", "row"}, {}};
  for (int r = 0; r < model.dimension; ++r) {
    const Interval j = r == 0 ? model.j0 : model.branch_preimages[static_cast<std::size_t>(r - 1)];
    std::string row;
    for (int c = 0; c < model.dimension; ++c) row += model.at(r, c) ? '1' : '0';
    t.rows.push_back({std::int64_t{-r}, j.lo, j.hi, row});
  }
  return t;
}

Table corner_table(const std::vector<CornerAccumulationRow>& rows) {
  Table t{{"resolution", "eps", "corner_00", "corner_10", "corner_01", "corner_11", "classes", "components"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({std::int64_t{r.resolution}, r.eps, std::int64_t{r.per_corner[0]}, std::int64_t{r.per_corner[1]},
                      std::int64_t{r.per_corner[2]}, std::int64_t{r.per_corner[3]}, std::int64_t{r.classes},
                      std::int64_t{r.components}});
  }
  return t;
}

Table interior_table(const std::vector<InteriorAccumulationRow>& rows) {
  Table t{{"resolution", "radius", "components_in_disk", "components"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({std::int64_t{r.resolution}, r.radius, std::int64_t{r.count}, std::int64_t{r.components}});
  }
  return t;
}

}  // namespace cascade
