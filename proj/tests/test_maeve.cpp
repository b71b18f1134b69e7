#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "streamdesc/exact_oracle.hpp"
#include "streamdesc/maeve.hpp"
#include "testutil.hpp"

using namespace streamdesc;

TEST_CASE("vertex features from (degree, triangles, path ends)") {
  // Leaf of a star: degree 1, no triangles, two paths end here.
  auto leaf = maeve_vertex_features(1, 0, 2);
  CHECK(leaf == std::array<double, 5>{1, 0, 3, 1, 2});
  // Triangle corner.
  auto corner = maeve_vertex_features(2, 1, 2);
  CHECK(corner == std::array<double, 5>{2, 1, 2, 3, 0});
  // Isolated vertex: the two ratio features fall back to zero.
  auto isolated = maeve_vertex_features(0, 0, 0);
  CHECK(isolated == std::array<double, 5>{0, 0, 0, 0, 0});
  // Degree 1 leaves clustering at zero (no pair to close).
  auto pendant = maeve_vertex_features(1, 0, 3);
  CHECK(pendant[1] == 0.0);
  CHECK(pendant[2] == doctest::Approx(4.0));
}

TEST_CASE("population moments") {
  auto m = population_moments({0, 0, 3, 3});
  CHECK(m[0] == doctest::Approx(1.5));
  CHECK(m[1] == doctest::Approx(1.5));
  CHECK(m[2] == doctest::Approx(0.0));
  CHECK(m[3] == doctest::Approx(1.0));

  auto star = population_moments({3, 1, 1, 1});
  CHECK(star[0] == doctest::Approx(1.5));
  CHECK(star[1] == doctest::Approx(std::sqrt(0.75)));
  // Central moments of {3,1,1,1}: m2 = 0.75, m3 = 0.75, m4 = 1.3125.
  CHECK(star[2] == doctest::Approx(0.75 / std::pow(0.75, 1.5)));
  CHECK(star[3] == doctest::Approx(1.3125 / (0.75 * 0.75)));

  auto flat = population_moments({5, 5, 5});
  CHECK(flat == std::array<double, 4>{5, 0, 0, 0});
  auto empty = population_moments({});
  CHECK(empty == std::array<double, 4>{0, 0, 0, 0});
}

TEST_CASE("descriptor layout is feature-major") {
  // Single edge: both vertices have features (1, 0, 1, 1, 0).
  MaeveDescriptor d = assemble_maeve({1, 1}, {0, 0}, {0, 0});
  std::array<double, kMaeveDimension> expect{};
  expect[0 * kMaeveMomentCount] = 1;  // degree mean
  expect[2 * kMaeveMomentCount] = 1;  // avg neighbor degree mean
  expect[3 * kMaeveMomentCount] = 1;  // egonet edges mean
  for (std::size_t i = 0; i < kMaeveDimension; ++i) {
    CHECK(d.values[i] == doctest::Approx(expect[i]));
  }
}

TEST_CASE("accumulator sizes must agree") {
  CHECK_THROWS_AS(assemble_maeve({1, 1}, {0}, {0, 0}), ConfigError);
  CHECK_THROWS_AS(assemble_maeve({1}, {0}, {0, 0}), ConfigError);
}

TEST_CASE("full-budget drive recovers exact per-vertex counts") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    PreparedStream s = testutil::er_stream(5 + seed % 7, 0.45, 6100 + seed);
    DenseGraph g = DenseGraph::from_stream(s);
    ExactVertexCounts expect = exact_vertex_counts(g);

    MaeveAccumulator acc(s.num_vertices);
    stream_drive(s, {&acc}, std::max<std::uint64_t>(1, s.num_edges()), seed);
    REQUIRE(acc.degrees().size() == expect.degree.size());
    for (VertexId v = 0; v < s.num_vertices; ++v) {
      CHECK(acc.degrees()[v] == expect.degree[v]);
      CHECK(acc.triangle_counts()[v] ==
            doctest::Approx(double(expect.triangles[v])));
      CHECK(acc.path_end_counts()[v] ==
            doctest::Approx(double(expect.path_ends[v])));
    }

    MaeveDescriptor streamed =
        assemble_maeve(acc.degrees(), acc.triangle_counts(), acc.path_end_counts());
    MaeveDescriptor reference = oracle_maeve_descriptor(g);
    for (std::size_t i = 0; i < kMaeveDimension; ++i) {
      CHECK(streamed.values[i] ==
            doctest::Approx(reference.values[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("star graph descriptor") {
  // Star with 4 leaves: degrees (4,1,1,1,1); no triangles; the center ends
  // no 3-path, each leaf ends 3.
  PreparedStream s =
      testutil::make_stream(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  MaeveAccumulator acc(s.num_vertices);
  stream_drive(s, {&acc}, s.num_edges(), 2);
  CHECK(acc.degrees() == std::vector<std::int64_t>{4, 1, 1, 1, 1});
  CHECK(acc.triangle_counts() == std::vector<double>{0, 0, 0, 0, 0});
  CHECK(acc.path_end_counts() == std::vector<double>{0, 3, 3, 3, 3});

  MaeveDescriptor d =
      assemble_maeve(acc.degrees(), acc.triangle_counts(), acc.path_end_counts());
  CHECK(d.values[0] == doctest::Approx(8.0 / 5.0));   // mean degree
  CHECK(d.values[4] == doctest::Approx(0.0));         // mean clustering
  // avg neighbor degree: center 1 + 0/4 = 1, each leaf 1 + 3/1 = 4.
  CHECK(d.values[8] == doctest::Approx((1.0 + 4 * 4.0) / 5.0));
}

TEST_CASE("sampled triangle memberships center on the exact values") {
  PreparedStream base = testutil::er_stream(22, 0.35, 88);
  DenseGraph g = DenseGraph::from_stream(base);
  ExactVertexCounts expect = exact_vertex_counts(g);
  double exact_total = 0;
  for (auto t : expect.triangles) exact_total += double(t);
  REQUIRE(exact_total > 0);

  const int trials = 300;
  const std::uint64_t budget = (base.num_edges() + 3) / 4;
  double sum = 0, sumsq = 0;
  for (int trial = 0; trial < trials; ++trial) {
    MaeveAccumulator acc(base.num_vertices);
    stream_drive(base, {&acc}, budget, 500 + trial);
    double total = 0;
    for (double t : acc.triangle_counts()) total += t;
    sum += total;
    sumsq += total * total;
  }
  double mean = sum / trials;
  double var = sumsq / trials - mean * mean;
  double se = std::sqrt(std::max(var, 1e-12) / trials);
  CHECK(std::abs(mean - exact_total) < 4.0 * se + 1e-9);
}
