#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>

#include "cascade/basin.hpp"
#include "cascade/components.hpp"
#include "cascade/errors.hpp"
#include "cascade/io.hpp"
#include "doctest.h"

using namespace cascade;

namespace {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

GridSpec small_grid(int resolution) {
  GridSpec spec;
  spec.resolution = resolution;
  return spec;
}

}  // namespace

TEST_SUITE("basin_engine") {

TEST_CASE("grid geometry") {
  const GridSpec spec = small_grid(4);
  CHECK(spec.cell_x(0) == 0.125);
  CHECK(spec.cell_x(3) == 0.875);
  CHECK(spec.cell_y(1) == 0.375);
  const LatticeState s = spec.cell_state(1, 2);
  CHECK(s[0] == 0.625);
  CHECK(s[1] == 0.375);

  GridSpec bad = spec;
  bad.resolution = 0;
  CHECK_THROWS_AS(bad.validate(), ParameterError);
  bad = spec;
  bad.window = 0;
  CHECK_THROWS_AS(bad.validate(), ParameterError);
  bad = spec;
  bad.domain = {0.5, 0.2, 0.0, 1.0};
  CHECK_THROWS_AS(bad.validate(), ParameterError);
}

TEST_CASE("mirrored cell centres sum to exactly 1") {
  for (int r : {2, 7, 64, 99, 499}) {
    const GridSpec spec = small_grid(r);
    for (int k = 0; k < r; ++k) {
      REQUIRE(spec.cell_x(k) + spec.cell_x(r - 1 - k) == 1.0);
      REQUIRE(logistic(spec.cell_x(k)) == logistic(spec.cell_x(r - 1 - k)));
    }
  }
}

TEST_CASE("one class at 0.80") {
  const BasinGrid g = render_basins(Threshold(0.80), small_grid(63), 1);
  CHECK(g.class_count() == 1);
  CHECK(label_components(g.classes, g.rows(), g.cols()).count == 1);
}

TEST_CASE("two classes at 0.84 with fingerprints of the two period-2 orbits") {
  const Threshold t(0.84);
  const BasinGrid g = render_basins(t, small_grid(125), 0);
  REQUIRE(g.class_count() == 2);
  CHECK(g.class_table[1] == doctest::Approx(12.0 * (logistic(t.c2()) - t.c1())).epsilon(1e-9));
  CHECK(g.class_table[0] == doctest::Approx(0.0757711759).epsilon(1e-8));
  const auto labels = label_components(g.classes, g.rows(), g.cols());
  CHECK(labels.count > g.class_count());
}

TEST_CASE("bucketing") {
  const auto b = bucket_fingerprints({1.0, 3.0, 1.0 + 5e-7, 2.0, 3.0 - 1e-7});
  CHECK(b.representatives == std::vector{1.0, 2.0, 3.0 - 1e-7});
  CHECK(b.classes == std::vector<std::uint32_t>{0, 2, 0, 1, 2});
  CHECK(bucket_fingerprints({}).representatives.empty());
}

TEST_CASE("reflection symmetry of the class map") {
  for (double c1 : {0.80, 0.84, 0.88, 0.95, 0.99}) {
    const BasinGrid g = render_basins(Threshold(c1), small_grid(99), 0);
    const int r = g.rows();
    int mismatches = 0;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) mismatches += g.class_at(i, j) != g.class_at(r - 1 - i, r - 1 - j);
    }
    CHECK_MESSAGE(mismatches == 0, "c1 = " << c1);
  }
}

TEST_CASE("rendering is identical for every worker count and matches the frozen images") {
  const Threshold t(0.84);
  const BasinGrid reference = render_basins(t, small_grid(63), 1);
  const auto pgm = encode_pgm(reference.classes, 63, 63, reference.class_count());
  const auto ppm = encode_ppm(reference.classes, 63, 63, reference.class_count());
  for (unsigned workers : {2u, 3u, 8u}) {
    const BasinGrid g = render_basins(t, small_grid(63), workers);
    CHECK(g.fingerprints == reference.fingerprints);
    CHECK(encode_ppm(g.classes, 63, 63, g.class_count()) == ppm);
  }
  const std::filesystem::path data = CASCADE_TEST_DATA_DIR;
  CHECK(read_file(data / "basin_084_r63.pgm") == pgm);
  CHECK(read_file(data / "basin_084_r63.ppm") == ppm);
}

TEST_CASE("extended fingerprints refine the plain ones") {
  GridSpec spec = small_grid(63);
  const Threshold t(0.95);
  const BasinGrid plain = render_basins(t, spec, 0);
  spec.extended_fingerprint = true;
  const BasinGrid extended = render_basins(t, spec, 0);
  CHECK(extended.class_count() >= plain.class_count());
  // Cells sharing an extended class share a plain class.
  std::map<std::uint32_t, std::uint32_t> seen;
  for (std::size_t k = 0; k < plain.classes.size(); ++k) {
    const auto [it, inserted] = seen.emplace(extended.classes[k], plain.classes[k]);
    REQUIRE(it->second == plain.classes[k]);
  }
}

TEST_CASE("pinned sites give a three-site slice") {
  GridSpec spec = small_grid(31);
  spec.pinned_sites = {0.4};
  REQUIRE(spec.sites() == 3);
  const BasinGrid g = render_basins(Threshold(0.84), spec, 0);
  CHECK(g.class_count() >= 2);
  CHECK(spec.cell_state(0, 0).size() == 3);
}

}  // TEST_SUITE

TEST_SUITE("components") {

TEST_CASE("labelling a hand-made map") {
  // 0 0 1
  // 1 0 1
  // 1 1 0
  const std::vector<std::uint32_t> map{0, 0, 1, 1, 0, 1, 1, 1, 0};
  const auto l = label_components(map, 3, 3);
  CHECK(l.count == 4);
  CHECK(l.ids == std::vector<std::uint32_t>{0, 0, 1, 2, 0, 1, 2, 2, 3});
  CHECK(l.component_class == std::vector<std::uint32_t>{0, 1, 1, 0});
  CHECK(l.per_class == std::vector<std::uint32_t>{2, 2});
}

TEST_CASE("a U shape merges through the second pass") {
  // 1 0 1
  // 1 0 1
  // 1 1 1
  const std::vector<std::uint32_t> map{1, 0, 1, 1, 0, 1, 1, 1, 1};
  const auto l = label_components(map, 3, 3);
  CHECK(l.count == 2);
  CHECK(l.ids[0] == l.ids[2]);
}

TEST_CASE("diagonal neighbours stay apart") {
  const std::vector<std::uint32_t> map{0, 1, 1, 0};
  CHECK(label_components(map, 2, 2).count == 4);
}

TEST_CASE("size mismatch") {
  const std::vector<std::uint32_t> map{0, 1, 1};
  CHECK_THROWS_AS(label_components(map, 2, 2), ParameterError);
}

TEST_CASE("corner and disk counts at 0.84") {
  const Threshold t(0.84);
  GridSpec spec;
  const auto rows = corner_accumulation(t, spec, {0.1}, {125, 249}, 0);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].per_corner[0] == 10);
  CHECK(rows[1].per_corner[0] > rows[0].per_corner[0]);
  // The four corners agree by the reflection symmetry.
  CHECK(rows[0].per_corner[0] == rows[0].per_corner[3]);

  spec.resolution = 125;
  const auto disks = interior_accumulation(t, spec, {0.3, 0.4}, {0.01, 0.2}, 0);
  REQUIRE(disks.size() == 2);
  CHECK(disks[0].count <= disks[1].count);
  CHECK_THROWS_AS(interior_accumulation(t, spec, {0.0, 0.5}, {0.1}, 0), ParameterError);
}

}  // TEST_SUITE
