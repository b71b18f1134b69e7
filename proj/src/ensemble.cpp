#include "streamdesc/ensemble.hpp"

namespace streamdesc {

namespace {

void check(const EnsembleConfig& config) {
  if (config.workers == 0) throw ConfigError("need at least one worker");
  if (config.budget == 0) throw ConfigError("sample budget must be positive");
}

}  // namespace

std::uint64_t worker_seed(std::uint64_t base_seed, std::uint32_t worker) {
  return mix_seed(base_seed, kWorkerSeedSalt, worker);
}

GabeEstimate ensemble_gabe(const PreparedStream& stream,
                           const EnsembleConfig& config) {
  check(config);
  GabeEstimate out;
  for (std::uint32_t w = 0; w < config.workers; ++w) {
    GabeAccumulator acc(stream.num_vertices);
    std::vector<ArrivalObserver*> observers{&acc};
    stream_drive(stream, observers, config.budget,
                 worker_seed(config.base_seed, w));
    GabeRawCounts raw = acc.raw();
    out.raw.triangle += raw.triangle;
    out.raw.path4 += raw.path4;
    out.raw.paw += raw.paw;
    out.raw.cycle4 += raw.cycle4;
    out.raw.diamond += raw.diamond;
    out.raw.k4 += raw.k4;
    if (w == 0) out.exact = acc.exact();
  }
  double inv = 1.0 / config.workers;
  out.raw.triangle *= inv;
  out.raw.path4 *= inv;
  out.raw.paw *= inv;
  out.raw.cycle4 *= inv;
  out.raw.diamond *= inv;
  out.raw.k4 *= inv;
  return out;
}

MaeveEstimate ensemble_maeve(const PreparedStream& stream,
                             const EnsembleConfig& config) {
  check(config);
  MaeveEstimate out;
  out.triangles.assign(stream.num_vertices, 0.0);
  out.path_ends.assign(stream.num_vertices, 0.0);
  for (std::uint32_t w = 0; w < config.workers; ++w) {
    MaeveAccumulator acc(stream.num_vertices);
    std::vector<ArrivalObserver*> observers{&acc};
    stream_drive(stream, observers, config.budget,
                 worker_seed(config.base_seed, w));
    for (VertexId v = 0; v < stream.num_vertices; ++v) {
      out.triangles[v] += acc.triangle_counts()[v];
      out.path_ends[v] += acc.path_end_counts()[v];
    }
    if (w == 0) out.degrees = acc.degrees();
  }
  double inv = 1.0 / config.workers;
  for (VertexId v = 0; v < stream.num_vertices; ++v) {
    out.triangles[v] *= inv;
    out.path_ends[v] *= inv;
  }
  return out;
}

TraceEstimates ensemble_santa(const PreparedStream& stream,
                              const EnsembleConfig& config) {
  check(config);
  const DegreeTable degrees = degree_pass(stream);
  TraceEstimates sum;
  for (std::uint32_t w = 0; w < config.workers; ++w) {
    TraceEstimates est = trace_estimates(stream, degrees, config.budget,
                                         worker_seed(config.base_seed, w));
    sum.tr_identity = est.tr_identity;
    sum.tr_laplacian = est.tr_laplacian;
    sum.tau2 += est.tau2;
    sum.tau3 += est.tau3;
    sum.tau4 += est.tau4;
  }
  double inv = 1.0 / config.workers;
  sum.tau2 *= inv;
  sum.tau3 *= inv;
  sum.tau4 *= inv;
  return sum;
}

}  // namespace streamdesc
