#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "streamdesc/sampling.hpp"
#include "testutil.hpp"

using namespace streamdesc;

namespace {

// Upper chi-square critical value via the Wilson-Hilferty cube approximation.
double chi2_critical(double df, double z) {
  double a = 2.0 / (9.0 * df);
  double c = 1.0 - a + z * std::sqrt(a);
  return df * c * c * c;
}

}  // namespace

TEST_CASE("reservoir keeps everything until the budget is full") {
  ReservoirSample sample(10, 6, 1);
  for (VertexId i = 1; i <= 6; ++i) sample.offer(Edge{0, i});
  CHECK(sample.size() == 6);
  CHECK(sample.edges_seen() == 6);
  for (VertexId i = 1; i <= 6; ++i) CHECK(sample.has_edge(0, i));
  CHECK(sample.neighbors(0).size() == 6);
  CHECK(std::is_sorted(sample.neighbors(0).begin(), sample.neighbors(0).end()));
}

TEST_CASE("reservoir size is capped at the budget") {
  ReservoirSample sample(40, 5, 7);
  for (VertexId i = 1; i < 40; ++i) sample.offer(Edge{0, i});
  CHECK(sample.size() == 5);
  CHECK(sample.edges_seen() == 39);
  CHECK(sample.neighbors(0).size() == 5);
}

TEST_CASE("zero budget is a configuration error") {
  CHECK_THROWS_AS(ReservoirSample(4, 0, 1), ConfigError);
}

TEST_CASE("adjacency stays consistent with the stored edge list") {
  PreparedStream s = testutil::er_stream(20, 0.4, 17);
  ReservoirSample sample(s.num_vertices, 9, 3);
  for (const Edge& e : s.edges) {
    sample.offer(e);
    std::set<std::pair<VertexId, VertexId>> stored;
    std::size_t adjacency_total = 0;
    for (const Edge& kept : sample.edges()) {
      stored.insert({kept.u, kept.v});
      CHECK(sample.has_edge(kept.u, kept.v));
      CHECK(sample.has_edge(kept.v, kept.u));
    }
    for (VertexId v = 0; v < sample.num_vertices(); ++v) {
      adjacency_total += sample.neighbors(v).size();
      for (VertexId w : sample.neighbors(v)) {
        CHECK(stored.count({std::min(v, w), std::max(v, w)}) == 1);
      }
    }
    CHECK(adjacency_total == 2 * sample.size());
  }
}

TEST_CASE("same seed reproduces the sample, different seeds diverge") {
  PreparedStream s = testutil::er_stream(25, 0.4, 5);
  auto run = [&](std::uint64_t seed) {
    ReservoirSample sample(s.num_vertices, 8, seed);
    for (const Edge& e : s.edges) sample.offer(e);
    return sample.edges();
  };
  CHECK(run(11) == run(11));
  CHECK(run(11) != run(12));
}

TEST_CASE("marginal keep rate matches b/t") {
  // 19 edges pre-offered, then one more at t = 20 with budget 10: the final
  // reservoir is a uniform 10-subset, so the newcomer survives w.p. 1/2.
  const int trials = 100000;
  int kept = 0;
  for (int trial = 0; trial < trials; ++trial) {
    ReservoirSample sample(40, 10, 1000 + trial);
    for (VertexId i = 3; i < 22; ++i) sample.offer(Edge{0, i});
    sample.offer(Edge{1, 2});
    if (sample.has_edge(1, 2)) ++kept;
  }
  double rate = static_cast<double>(kept) / trials;
  CHECK(std::abs(rate - 0.5) < 0.01);
}

TEST_CASE("final reservoir is uniform over edges (chi-square)") {
  const int num_edges = 40;
  const std::uint64_t budget = 15;
  const int trials = 10000;
  std::vector<int> hits(num_edges, 0);
  for (int trial = 0; trial < trials; ++trial) {
    ReservoirSample sample(num_edges + 1, budget, 555 + trial);
    for (VertexId i = 0; i < num_edges; ++i) sample.offer(Edge{0, i + 1});
    for (const Edge& e : sample.edges()) ++hits[e.v - 1];
  }
  const double p = static_cast<double>(budget) / num_edges;
  const double expected = trials * p;
  double stat = 0;
  for (int c : hits) {
    double d = c - expected;
    stat += d * d / (expected * (1.0 - p));
  }
  // Negatively correlated cells make this conservative; 1% critical value.
  CHECK(stat < chi2_critical(num_edges, 2.326348));
}

TEST_CASE("detection probability is exact while the budget covers history") {
  CHECK(detection_probability(3, 1, 5) == 1.0);
  CHECK(detection_probability(6, 6, 5) == 1.0);
  CHECK(detection_probability(2, 50, 49) == 1.0);
  CHECK(detection_probability(1, 1000, 5) == 1.0);
}

TEST_CASE("detection probability matches the closed form") {
  // m = 3, t = 101, b = 50: (50/100) * (49/99)
  CHECK(detection_probability(3, 101, 50) ==
        doctest::Approx(50.0 / 100.0 * 49.0 / 99.0).epsilon(1e-12));
  // m = 6, t = 1001, b = 100
  double expect = 1.0;
  for (int i = 0; i < 5; ++i) expect *= (100.0 - i) / (1000.0 - i);
  CHECK(detection_probability(6, 1001, 100) ==
        doctest::Approx(expect).epsilon(1e-12));
  CHECK(detection_probability(6, 1001, 100) == doctest::Approx(9.036e-6).epsilon(1e-3));
}

TEST_CASE("detection probability is non-increasing in t") {
  for (std::uint32_t m = 2; m <= 6; ++m) {
    double prev = 1.0;
    for (std::uint64_t t = 1; t <= 400; ++t) {
      if (t > 1 && t - 1 < m - 1) continue;  // instance cannot exist yet
      double p = detection_probability(m, t, 50);
      CHECK(p <= prev + 1e-15);
      CHECK(p > 0.0);
      CHECK(p <= 1.0);
      prev = p;
    }
  }
}

TEST_CASE("detection probability rejects impossible configurations") {
  CHECK_THROWS_AS(detection_probability(0, 10, 5), ConfigError);
  CHECK_THROWS_AS(detection_probability(6, 10, 3), ConfigError);  // b + 1 < m
  CHECK_THROWS_AS(detection_probability(3, 0, 5), ConfigError);
}
