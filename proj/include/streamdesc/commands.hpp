#pragma once

#include <cstdint>
#include <string>

#include "streamdesc/eval.hpp"
#include "streamdesc/pipeline.hpp"

namespace streamdesc {

// Subcommand drivers behind the CLI. They throw ConfigError for usage
// problems and ParseError/DataError for bad inputs; the CLI maps those to
// exit codes 2 and 3.

struct ComputeOptions {
  std::string corpus;
  DescriptorKind kind{DescriptorKind::kGabe};
  BudgetSpec budget;
  std::uint32_t workers{1};
  std::uint64_t seed{0};
  std::uint32_t threads{1};
  std::string out;
};
void cmd_compute(const ComputeOptions& options);

struct OracleOptions {
  std::string corpus;
  std::uint64_t seed{0};
  std::string out;
};
void cmd_oracle(const OracleOptions& options);

struct CompareOptions {
  std::string estimated_csv;
  std::string exact_csv;
  DistanceKind metric{DistanceKind::kCanberra};
  std::string out;  // optional per-graph distance CSV
};
void cmd_compare(const CompareOptions& options);

struct ClassifyOptions {
  std::string descriptor_csv;
  std::uint32_t folds{10};
  std::uint32_t splits{10};
  DistanceKind metric{DistanceKind::kCanberra};
  std::uint64_t seed{0};
  std::string out;  // JSON summary; per-split CSV lands next to it
};
void cmd_classify(const ClassifyOptions& options);

// Loads either a corpus directory, a persisted stream, or a plain edge
// list (single graph, label 0).
LabeledCorpus load_any_corpus(const std::string& path, std::uint64_t seed);

}  // namespace streamdesc
