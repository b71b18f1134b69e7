#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "streamdesc/common.hpp"

namespace streamdesc {

enum class DistanceKind : std::uint8_t { kCanberra, kEuclidean };

const char* distance_name(DistanceKind kind);
DistanceKind parse_distance(const std::string& name);

// sum_i |x_i - y_i| / (|x_i| + |y_i|), with 0/0 terms counting as 0.
double canberra_distance(std::span<const double> x, std::span<const double> y);
double euclidean_distance(std::span<const double> x, std::span<const double> y);
double distance(DistanceKind kind, std::span<const double> x,
                std::span<const double> y);

// One labeled descriptor; graph ids are the stable identity used for fold
// assignment and tie breaking, so results do not depend on row order.
struct DescriptorRow {
  std::int64_t graph_id{0};
  std::int64_t label{0};
  std::vector<double> values;
};

struct EvalReport {
  std::vector<double> split_accuracies;
  double mean_accuracy{0};
  std::uint32_t folds_used{0};
  std::uint32_t splits{0};
  std::uint64_t seed{0};
  // set when a class had fewer members than the requested fold count
  bool folds_reduced{false};
};

// 1-nearest-neighbour accuracy over `splits` independent stratified k-fold
// partitions. Distance ties go to the lowest graph id. Classes smaller than
// the fold count shrink the effective fold count (never below 2).
EvalReport knn_cross_validate(const std::vector<DescriptorRow>& rows,
                              std::uint32_t folds, std::uint32_t splits,
                              DistanceKind metric, std::uint64_t seed);

struct ApproximationReport {
  std::vector<std::int64_t> graph_ids;
  std::vector<double> distances;
  double mean_distance{0};
};

// Per-graph distance between an estimated corpus and its exact reference,
// matched by graph id; id or dimension mismatches are data errors.
ApproximationReport approximation_report(
    const std::vector<DescriptorRow>& estimated,
    const std::vector<DescriptorRow>& exact, DistanceKind metric);

// |x - xhat| / |x| per coordinate; 0 when both are zero, infinity when only
// the reference is zero.
std::vector<double> relative_errors(std::span<const double> exact,
                                    std::span<const double> approx);

}  // namespace streamdesc
