#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "streamdesc/eval.hpp"
#include "streamdesc/rng.hpp"

using namespace streamdesc;

namespace {

std::vector<DescriptorRow> two_blob_rows(int per_class, double gap,
                                         std::uint64_t seed) {
  Rng rng(seed);
  std::vector<DescriptorRow> rows;
  for (int i = 0; i < 2 * per_class; ++i) {
    DescriptorRow row;
    row.graph_id = i;
    row.label = i < per_class ? 4 : 9;
    double base = row.label == 4 ? 0.0 : gap;
    row.values = {base + rng.unit(), base + rng.unit(), base + rng.unit()};
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("distance functions") {
  std::vector<double> a = {0, 1, 2};
  std::vector<double> b = {0, 0, 2};
  CHECK(canberra_distance(a, b) == doctest::Approx(1.0));
  std::vector<double> c = {1, 2};
  std::vector<double> d = {3, 2};
  CHECK(canberra_distance(c, d) == doctest::Approx(0.5));
  CHECK(canberra_distance(a, a) == 0.0);
  std::vector<double> zeros = {0, 0};
  CHECK(canberra_distance(zeros, zeros) == 0.0);
  // Opposite signs max out each term at |x-y| / (|x|+|y|) = 1.
  std::vector<double> e = {1.0};
  std::vector<double> f = {-1.0};
  CHECK(canberra_distance(e, f) == doctest::Approx(1.0));

  std::vector<double> g = {0, 0};
  std::vector<double> h = {3, 4};
  CHECK(euclidean_distance(g, h) == doctest::Approx(5.0));
  CHECK(distance(DistanceKind::kEuclidean, g, h) == doctest::Approx(5.0));
  CHECK(distance(DistanceKind::kCanberra, c, d) == doctest::Approx(0.5));

  std::vector<double> short_vec = {1};
  CHECK_THROWS_AS(canberra_distance(a, short_vec), DataError);
  CHECK_THROWS_AS(euclidean_distance(a, short_vec), DataError);
}

TEST_CASE("distance names") {
  CHECK(parse_distance("canberra") == DistanceKind::kCanberra);
  CHECK(parse_distance("euclidean") == DistanceKind::kEuclidean);
  CHECK(distance_name(DistanceKind::kCanberra) == std::string("canberra"));
  CHECK(distance_name(DistanceKind::kEuclidean) == std::string("euclidean"));
  CHECK_THROWS_AS(parse_distance("cosine"), ConfigError);
}

TEST_CASE("well separated classes classify almost perfectly") {
  auto rows = two_blob_rows(30, 25.0, 1);
  EvalReport report =
      knn_cross_validate(rows, 10, 10, DistanceKind::kEuclidean, 7);
  CHECK(report.folds_used == 10);
  CHECK(report.splits == 10);
  CHECK(report.split_accuracies.size() == 10);
  CHECK(report.mean_accuracy > 0.95);
  CHECK(!report.folds_reduced);
}

TEST_CASE("random labels score near chance") {
  Rng rng(77);
  std::vector<DescriptorRow> rows;
  for (int i = 0; i < 100; ++i) {
    DescriptorRow row;
    row.graph_id = i;
    row.label = i % 2;
    row.values = {rng.unit(), rng.unit(), rng.unit(), rng.unit()};
    rows.push_back(row);
  }
  EvalReport report =
      knn_cross_validate(rows, 10, 10, DistanceKind::kEuclidean, 11);
  CHECK(report.mean_accuracy > 0.35);
  CHECK(report.mean_accuracy < 0.65);
}

TEST_CASE("identical descriptors: ties go to the lowest graph id") {
  // 60 rows of class 0 on the low ids, 40 of class 1. Every distance is
  // zero, so every prediction is the label of the lowest training id, which
  // is always class 0: accuracy is exactly the class-0 share.
  std::vector<DescriptorRow> rows;
  for (int i = 0; i < 100; ++i) {
    rows.push_back(DescriptorRow{i, i < 60 ? 0 : 1, {1.0, 2.0}});
  }
  EvalReport report =
      knn_cross_validate(rows, 10, 3, DistanceKind::kCanberra, 5);
  CHECK(report.mean_accuracy == doctest::Approx(0.6).epsilon(1e-12));
  for (double acc : report.split_accuracies) {
    CHECK(acc == doctest::Approx(0.6).epsilon(1e-12));
  }
}

TEST_CASE("results are invariant under row order") {
  auto rows = two_blob_rows(12, 3.0, 21);
  EvalReport before =
      knn_cross_validate(rows, 5, 4, DistanceKind::kCanberra, 99);
  Rng rng(5);
  rng.shuffle(rows);
  EvalReport after =
      knn_cross_validate(rows, 5, 4, DistanceKind::kCanberra, 99);
  CHECK(before.split_accuracies == after.split_accuracies);
  CHECK(before.mean_accuracy == after.mean_accuracy);
}

TEST_CASE("same seed same report, different seed different folds") {
  auto rows = two_blob_rows(12, 1.0, 33);
  EvalReport a = knn_cross_validate(rows, 5, 6, DistanceKind::kEuclidean, 1);
  EvalReport b = knn_cross_validate(rows, 5, 6, DistanceKind::kEuclidean, 1);
  CHECK(a.split_accuracies == b.split_accuracies);
  CHECK(a.seed == 1);
}

TEST_CASE("small classes shrink the fold count") {
  std::vector<DescriptorRow> rows;
  for (int i = 0; i < 20; ++i) {
    rows.push_back(DescriptorRow{i, 0, {double(i), 1.0}});
  }
  for (int i = 20; i < 23; ++i) {
    rows.push_back(DescriptorRow{i, 1, {double(i), 5.0}});
  }
  EvalReport report =
      knn_cross_validate(rows, 10, 2, DistanceKind::kEuclidean, 3);
  CHECK(report.folds_used == 3);
  CHECK(report.folds_reduced);
}

TEST_CASE("cross validation input validation") {
  std::vector<DescriptorRow> one_class = {
      {0, 1, {1.0}}, {1, 1, {2.0}}, {2, 1, {3.0}}};
  CHECK_THROWS_AS(
      knn_cross_validate(one_class, 2, 1, DistanceKind::kEuclidean, 1),
      ConfigError);

  std::vector<DescriptorRow> dup_ids = {
      {0, 0, {1.0}}, {0, 1, {2.0}}, {1, 0, {3.0}}, {2, 1, {4.0}}};
  CHECK_THROWS_AS(knn_cross_validate(dup_ids, 2, 1, DistanceKind::kEuclidean, 1),
                  DataError);

  std::vector<DescriptorRow> ragged = {
      {0, 0, {1.0}}, {1, 1, {2.0, 3.0}}, {2, 0, {3.0}}, {3, 1, {4.0}}};
  CHECK_THROWS_AS(knn_cross_validate(ragged, 2, 1, DistanceKind::kEuclidean, 1),
                  DataError);

  std::vector<DescriptorRow> empty;
  CHECK_THROWS_AS(knn_cross_validate(empty, 2, 1, DistanceKind::kEuclidean, 1),
                  ConfigError);
}

TEST_CASE("approximation report pairs rows by graph id") {
  std::vector<DescriptorRow> estimated = {
      {3, 0, {1.0, 1.0}}, {1, 0, {0.0, 2.0}}};
  std::vector<DescriptorRow> exact = {
      {1, 0, {0.0, 2.0}}, {3, 0, {1.0, 3.0}}};
  ApproximationReport report =
      approximation_report(estimated, exact, DistanceKind::kEuclidean);
  REQUIRE(report.graph_ids.size() == 2);
  // Rows keep the order of the estimated corpus.
  CHECK(report.graph_ids == std::vector<std::int64_t>{3, 1});
  CHECK(report.distances[0] == doctest::Approx(2.0));
  CHECK(report.distances[1] == doctest::Approx(0.0));
  CHECK(report.mean_distance == doctest::Approx(1.0));

  std::vector<DescriptorRow> wrong_ids = {{2, 0, {0.0, 2.0}},
                                          {3, 0, {1.0, 3.0}}};
  CHECK_THROWS_AS(
      approximation_report(estimated, wrong_ids, DistanceKind::kEuclidean),
      DataError);
}

TEST_CASE("relative errors") {
  std::vector<double> exact = {10.0, 0.0, 0.0, -4.0};
  std::vector<double> approx = {9.0, 0.0, 1.0, -5.0};
  auto err = relative_errors(exact, approx);
  REQUIRE(err.size() == 4);
  CHECK(err[0] == doctest::Approx(0.1));
  CHECK(err[1] == 0.0);
  CHECK(std::isinf(err[2]));
  CHECK(err[3] == doctest::Approx(0.25));
}
