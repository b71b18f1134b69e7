#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "streamdesc/exact_oracle.hpp"
#include "streamdesc/gabe.hpp"
#include "testutil.hpp"

using namespace streamdesc;

namespace {

GabeDescriptor exact_mode_descriptor(const PreparedStream& s,
                                     std::uint64_t seed = 1) {
  GabeAccumulator acc(s.num_vertices);
  stream_drive(s, {&acc}, std::max<std::uint64_t>(1, s.num_edges()), seed);
  return assemble_gabe(acc.raw(), acc.exact());
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(4, 2) == 6.0);
  CHECK(binomial(5, 3) == 10.0);
  CHECK(binomial(6, 2) == 15.0);
  CHECK(binomial(3, 4) == 0.0);
  CHECK(binomial(0, 2) == 0.0);
  CHECK(binomial(7, 0) == 1.0);
  CHECK(binomial(0, 0) == 1.0);
}

TEST_CASE("full-budget drive recovers the exact counts of a 4-clique") {
  PreparedStream s = testutil::make_stream(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  GabeAccumulator acc(s.num_vertices);
  stream_drive(s, {&acc}, s.num_edges(), 9);

  GabeRawCounts raw = acc.raw();
  CHECK(raw.triangle == doctest::Approx(4.0));
  CHECK(raw.path4 == doctest::Approx(12.0));
  CHECK(raw.paw == doctest::Approx(12.0));
  CHECK(raw.cycle4 == doctest::Approx(3.0));
  CHECK(raw.diamond == doctest::Approx(6.0));
  CHECK(raw.k4 == doctest::Approx(1.0));

  GabeExactCounts exact = acc.exact();
  CHECK(exact.num_vertices == 4);
  CHECK(exact.num_edges == 6);
  CHECK(exact.wedge == doctest::Approx(12.0));
  CHECK(exact.claw == doctest::Approx(4.0));

  const GraphletCatalog& cat = GraphletCatalog::get();
  auto h = gabe_subgraph_vector(raw, exact);
  auto expect_subgraphs = exact_subgraph_counts(DenseGraph::from_stream(s));
  for (std::size_t i = 0; i < kGabeDimension; ++i) {
    CHECK(h[i] == doctest::Approx(double(expect_subgraphs[i])));
  }
  CHECK(h[cat.index_of(GraphletClass::kTwoEdgeMatching)] == doctest::Approx(3.0));
  CHECK(h[cat.index_of(GraphletClass::kEdgePlusIsolated)] == doctest::Approx(12.0));

  GabeDescriptor d = assemble_gabe(raw, exact);
  CHECK(!d.degenerate);
  std::array<double, kGabeDimension> expect{};
  expect[cat.index_of(GraphletClass::kSingleEdge)] = 1.0;
  expect[cat.index_of(GraphletClass::kTriangle)] = 1.0;
  expect[cat.index_of(GraphletClass::kComplete4)] = 1.0;
  for (std::size_t i = 0; i < kGabeDimension; ++i) {
    CHECK(d.values[i] == doctest::Approx(expect[i]).epsilon(1e-12));
  }
}

TEST_CASE("triangle graph: order-4 block is zero and flagged degenerate") {
  PreparedStream s = testutil::make_stream(3, {{0, 1}, {0, 2}, {1, 2}});
  GabeDescriptor d = exact_mode_descriptor(s);
  CHECK(d.degenerate);
  const GraphletCatalog& cat = GraphletCatalog::get();
  CHECK(d.values[cat.index_of(GraphletClass::kSingleEdge)] == doctest::Approx(1.0));
  CHECK(d.values[cat.index_of(GraphletClass::kTriangle)] == doctest::Approx(1.0));
  auto [lo4, hi4] = cat.order_block(4);
  for (std::size_t i = lo4; i < hi4; ++i) CHECK(d.values[i] == 0.0);
  CHECK(d.values[cat.index_of(GraphletClass::kEmpty2)] == doctest::Approx(0.0));
}

TEST_CASE("two-edge path graph: induced shares") {
  PreparedStream s = testutil::make_stream(3, {{0, 1}, {1, 2}});
  GabeDescriptor d = exact_mode_descriptor(s);
  const GraphletCatalog& cat = GraphletCatalog::get();
  CHECK(d.values[cat.index_of(GraphletClass::kEmpty2)] ==
        doctest::Approx(1.0 / 3.0));
  CHECK(d.values[cat.index_of(GraphletClass::kSingleEdge)] ==
        doctest::Approx(2.0 / 3.0));
  CHECK(d.values[cat.index_of(GraphletClass::kWedge)] == doctest::Approx(1.0));
  CHECK(d.values[cat.index_of(GraphletClass::kTriangle)] == doctest::Approx(0.0));
  CHECK(d.degenerate);
}

TEST_CASE("empty stream gives an all-zero degenerate descriptor") {
  PreparedStream s = testutil::make_stream(0, {});
  GabeDescriptor d = exact_mode_descriptor(s);
  CHECK(d.degenerate);
  for (double v : d.values) CHECK(v == 0.0);
}

TEST_CASE("full-budget descriptor matches the exhaustive reference") {
  // The streaming route goes raw counts -> subgraph vector -> overlap
  // inversion; the reference goes straight to induced counts. Agreement on
  // random graphs checks both routes end to end.
  for (std::uint64_t seed = 0; seed < 36; ++seed) {
    VertexId n = 4 + static_cast<VertexId>(seed % 9);
    double p = (seed % 3 == 0) ? 0.2 : (seed % 3 == 1 ? 0.5 : 0.8);
    PreparedStream s = testutil::er_stream(n, p, 4000 + seed);
    DenseGraph g = DenseGraph::from_stream(s);

    GabeAccumulator acc(s.num_vertices);
    stream_drive(s, {&acc}, std::max<std::uint64_t>(1, s.num_edges()), seed);
    auto h = gabe_subgraph_vector(acc.raw(), acc.exact());
    auto expect_h = exact_subgraph_counts(g);
    for (std::size_t i = 0; i < kGabeDimension; ++i) {
      CHECK(h[i] == doctest::Approx(double(expect_h[i])).epsilon(1e-9));
    }

    GabeDescriptor streamed = assemble_gabe(acc.raw(), acc.exact());
    GabeDescriptor reference = oracle_gabe_descriptor(g);
    CHECK(streamed.degenerate == reference.degenerate);
    for (std::size_t i = 0; i < kGabeDimension; ++i) {
      CHECK(streamed.values[i] ==
            doctest::Approx(reference.values[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("sampled estimates center on the exact counts") {
  PreparedStream base = testutil::er_stream(14, 0.4, 71);
  REQUIRE(base.num_edges() > 20);
  auto expect = exact_subgraph_counts(DenseGraph::from_stream(base));
  const GraphletCatalog& cat = GraphletCatalog::get();
  const double exact_triangle =
      double(expect[cat.index_of(GraphletClass::kTriangle)]);
  const double exact_path4 = double(expect[cat.index_of(GraphletClass::kPath4)]);
  REQUIRE(exact_triangle > 0);

  const int trials = 400;
  const std::uint64_t budget = (base.num_edges() + 3) / 4;
  double sum_tri = 0, sumsq_tri = 0, sum_p4 = 0, sumsq_p4 = 0;
  for (int trial = 0; trial < trials; ++trial) {
    GabeAccumulator acc(base.num_vertices);
    stream_drive(base, {&acc}, budget, 10000 + trial);
    sum_tri += acc.raw().triangle;
    sumsq_tri += acc.raw().triangle * acc.raw().triangle;
    sum_p4 += acc.raw().path4;
    sumsq_p4 += acc.raw().path4 * acc.raw().path4;
  }
  auto check_mean = [&](double sum, double sumsq, double exact) {
    double mean = sum / trials;
    double var = sumsq / trials - mean * mean;
    double se = std::sqrt(std::max(var, 1e-12) / trials);
    CHECK(std::abs(mean - exact) < 4.0 * se + 1e-9);
  };
  check_mean(sum_tri, sumsq_tri, exact_triangle);
  check_mean(sum_p4, sumsq_p4, exact_path4);
}
