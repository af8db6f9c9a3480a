#pragma once

// Stable output formats: CSV with a header row and 17-significant-digit
// reals, binary PGM (P5) of class ids and binary PPM (P6) with a fixed
// palette.

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cascade/attractors.hpp"
#include "cascade/basin.hpp"
#include "cascade/components.hpp"
#include "cascade/parameter_analysis.hpp"

namespace cascade {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest-safe decimal form: 17 significant digits, %g style.
std::string format_real(double value);
double parse_real(const std::string& text);

void write_csv(const Table& table, std::ostream& out);
/// Throws IoError naming the path on failure.
void write_csv(const Table& table, const std::filesystem::path& path);

struct CsvData {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvData read_csv(std::istream& in);
CsvData read_csv(const std::filesystem::path& path);

enum class ImageFormat { Csv, Pgm, Ppm };

using Rgb = std::array<std::uint8_t, 3>;

/// 12-hue wheel at 30 degree steps, index 0 = red (0 deg), 8 = blue (240 deg).
const std::array<Rgb, 12>& colour_wheel() noexcept;

/// Class k of `count`: wheel position 8 - round(8 k / (count - 1)), so the
/// lowest-fingerprint class is blue and the highest red.
Rgb palette_colour(std::uint32_t k, std::size_t count) noexcept;

/// Grey level round(255 k / (count - 1)); a single class is 0.
std::uint8_t grey_level(std::uint32_t k, std::size_t count) noexcept;

std::vector<std::uint8_t> encode_pgm(std::span<const std::uint32_t> classes, int rows, int cols, std::size_t class_count);
std::vector<std::uint8_t> encode_ppm(std::span<const std::uint32_t> classes, int rows, int cols, std::size_t class_count);

/// Writes the grid as fingerprint CSV, PGM or PPM. Image row r is grid row r.
void write_image(const BasinGrid& grid, const std::filesystem::path& path, ImageFormat format);
void write_bytes(const std::vector<std::uint8_t>& bytes, const std::filesystem::path& path);

Table orbit_table(const std::vector<ThresholdStep>& orbit);
Table star_table(const std::vector<StarValue>& stars);
Table scan_table(const std::vector<BifurcationSample>& samples);
Table fingerprint_table(const BasinGrid& grid);
Table census_table(const CensusResult& result);
Table markov_table(const MarkovModel& model);
Table corner_table(const std::vector<CornerAccumulationRow>& rows);
Table interior_table(const std::vector<InteriorAccumulationRow>& rows);

std::string describe(const OrbitClass& c);

}  // namespace cascade
