#pragma once

#include <cstdint>
#include <vector>

#include "streamdesc/gabe.hpp"
#include "streamdesc/maeve.hpp"
#include "streamdesc/santa.hpp"

namespace streamdesc {

// W replica estimators over the same edge order with independent sampling
// seeds derived from base_seed; raw estimates are averaged before any
// descriptor assembly, cutting estimator variance by about 1/W. Exact
// quantities (degrees, |E|) are identical across replicas and taken once.
struct EnsembleConfig {
  std::uint32_t workers{1};
  std::uint64_t base_seed{0};
  std::uint64_t budget{1};
};

std::uint64_t worker_seed(std::uint64_t base_seed, std::uint32_t worker);

struct GabeEstimate {
  GabeRawCounts raw;
  GabeExactCounts exact;
};

struct MaeveEstimate {
  std::vector<std::int64_t> degrees;
  std::vector<double> triangles;
  std::vector<double> path_ends;
};

GabeEstimate ensemble_gabe(const PreparedStream& stream,
                           const EnsembleConfig& config);

MaeveEstimate ensemble_maeve(const PreparedStream& stream,
                             const EnsembleConfig& config);

// Runs the exact degree pass once, then averages the replica trace
// estimates.
TraceEstimates ensemble_santa(const PreparedStream& stream,
                              const EnsembleConfig& config);

}  // namespace streamdesc
