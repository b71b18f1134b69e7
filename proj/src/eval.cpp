#include "streamdesc/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "streamdesc/rng.hpp"

namespace streamdesc {

const char* distance_name(DistanceKind kind) {
  return kind == DistanceKind::kCanberra ? "canberra" : "euclidean";
}

DistanceKind parse_distance(const std::string& name) {
  if (name == "canberra") return DistanceKind::kCanberra;
  if (name == "euclidean") return DistanceKind::kEuclidean;
  throw ConfigError("unknown distance '" + name + "'");
}

namespace {

void check_dims(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DataError("descriptor dimensions disagree: " +
                    std::to_string(x.size()) + " vs " +
                    std::to_string(y.size()));
  }
}

}  // namespace

double canberra_distance(std::span<const double> x,
                         std::span<const double> y) {
  check_dims(x, y);
  double sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double denom = std::fabs(x[i]) + std::fabs(y[i]);
    if (denom > 0) sum += std::fabs(x[i] - y[i]) / denom;
  }
  return sum;
}

double euclidean_distance(std::span<const double> x,
                          std::span<const double> y) {
  check_dims(x, y);
  double sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = x[i] - y[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double distance(DistanceKind kind, std::span<const double> x,
                std::span<const double> y) {
  return kind == DistanceKind::kCanberra ? canberra_distance(x, y)
                                         : euclidean_distance(x, y);
}

EvalReport knn_cross_validate(const std::vector<DescriptorRow>& rows,
                              std::uint32_t folds, std::uint32_t splits,
                              DistanceKind metric, std::uint64_t seed) {
  if (folds < 2) throw ConfigError("need at least 2 folds");
  if (splits < 1) throw ConfigError("need at least 1 split");
  if (rows.size() < folds) throw ConfigError("fewer items than folds");

  // Work in graph-id order so the partition depends on identities, not on
  // the order rows happened to be listed in.
  std::vector<std::size_t> by_id(rows.size());
  for (std::size_t i = 0; i < by_id.size(); ++i) by_id[i] = i;
  std::sort(by_id.begin(), by_id.end(), [&rows](std::size_t a, std::size_t b) {
    return rows[a].graph_id < rows[b].graph_id;
  });
  for (std::size_t i = 1; i < by_id.size(); ++i) {
    if (rows[by_id[i - 1]].graph_id == rows[by_id[i]].graph_id) {
      throw DataError("duplicate graph id " +
                      std::to_string(rows[by_id[i]].graph_id));
    }
  }

  const std::size_t dim = rows[by_id[0]].values.size();
  std::map<std::int64_t, std::vector<std::size_t>> classes;
  for (std::size_t pos : by_id) {
    if (rows[pos].values.size() != dim) {
      throw DataError("descriptor dimensions disagree within the corpus");
    }
    classes[rows[pos].label].push_back(pos);
  }
  if (classes.size() < 2) throw ConfigError("need at least 2 classes");

  std::size_t smallest_class = rows.size();
  for (const auto& [label, members] : classes) {
    smallest_class = std::min(smallest_class, members.size());
  }

  EvalReport report;
  report.splits = splits;
  report.seed = seed;
  std::uint32_t effective =
      static_cast<std::uint32_t>(std::min<std::size_t>(folds, smallest_class));
  if (effective < folds) report.folds_reduced = true;
  if (effective < 2) effective = 2;
  report.folds_used = effective;

  std::vector<std::uint32_t> fold_of(rows.size());
  for (std::uint32_t s = 0; s < splits; ++s) {
    Rng rng(mix_seed(seed, kSplitSeedSalt, s));
    // stratified assignment: shuffle each class, deal members round-robin,
    // rotating the starting fold so fold sizes stay balanced
    std::uint32_t start = 0;
    for (const auto& [label, members] : classes) {
      std::vector<std::size_t> order = members;
      rng.shuffle(order);
      for (std::size_t i = 0; i < order.size(); ++i) {
        fold_of[order[i]] =
            static_cast<std::uint32_t>((start + i) % effective);
      }
      start = static_cast<std::uint32_t>((start + order.size()) % effective);
    }

    double fold_accuracy_sum = 0;
    for (std::uint32_t f = 0; f < effective; ++f) {
      std::size_t tested = 0, correct = 0;
      for (std::size_t test_pos : by_id) {
        if (fold_of[test_pos] != f) continue;
        ++tested;
        double best = std::numeric_limits<double>::infinity();
        std::int64_t best_label = 0;
        // by_id order makes the tie rule "lowest graph id" automatic
        for (std::size_t train_pos : by_id) {
          if (fold_of[train_pos] == f) continue;
          double d = distance(metric, rows[train_pos].values,
                              rows[test_pos].values);
          if (d < best) {
            best = d;
            best_label = rows[train_pos].label;
          }
        }
        if (best_label == rows[test_pos].label) ++correct;
      }
      fold_accuracy_sum +=
          tested > 0 ? static_cast<double>(correct) / tested : 0.0;
    }
    report.split_accuracies.push_back(fold_accuracy_sum / effective);
  }

  double total = 0;
  for (double a : report.split_accuracies) total += a;
  report.mean_accuracy = total / splits;
  return report;
}

ApproximationReport approximation_report(
    const std::vector<DescriptorRow>& estimated,
    const std::vector<DescriptorRow>& exact, DistanceKind metric) {
  if (estimated.size() != exact.size()) {
    throw DataError("corpus sizes disagree: " +
                    std::to_string(estimated.size()) + " vs " +
                    std::to_string(exact.size()));
  }
  std::map<std::int64_t, const DescriptorRow*> reference;
  for (const DescriptorRow& row : exact) reference[row.graph_id] = &row;

  ApproximationReport report;
  double sum = 0;
  for (const DescriptorRow& row : estimated) {
    auto it = reference.find(row.graph_id);
    if (it == reference.end()) {
      throw DataError("graph id " + std::to_string(row.graph_id) +
                      " missing from the exact corpus");
    }
    double d = distance(metric, row.values, it->second->values);
    report.graph_ids.push_back(row.graph_id);
    report.distances.push_back(d);
    sum += d;
  }
  report.mean_distance =
      estimated.empty() ? 0.0 : sum / static_cast<double>(estimated.size());
  return report;
}

std::vector<double> relative_errors(std::span<const double> exact,
                                    std::span<const double> approx) {
  check_dims(exact, approx);
  std::vector<double> errors(exact.size());
  for (std::size_t i = 0; i < exact.size(); ++i) {
    double diff = std::fabs(exact[i] - approx[i]);
    if (exact[i] != 0.0) {
      errors[i] = diff / std::fabs(exact[i]);
    } else {
      errors[i] = diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
  }
  return errors;
}

}  // namespace streamdesc
