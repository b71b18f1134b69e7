#include "streamdesc/santa.hpp"

#include <cmath>
#include <string>

namespace streamdesc {

DegreeTable degree_pass(const PreparedStream& stream) {
  DegreeTable table;
  table.degree.assign(stream.num_vertices, 0);
  for (const Edge& e : stream.edges) {
    ++table.degree[e.u];
    ++table.degree[e.v];
  }
  for (std::int64_t d : table.degree) {
    if (d > 0) ++table.num_positive;
  }
  return table;
}

TraceAccumulator::TraceAccumulator(const DegreeTable& degrees,
                                   VertexId num_vertices)
    : degrees_(degrees), num_vertices_(num_vertices) {
  if (degrees.degree.size() != num_vertices) {
    throw DataError("degree table does not match stream vertex count");
  }
}

double TraceAccumulator::deg(VertexId v) const {
  if (v >= degrees_.degree.size() || degrees_.degree[v] <= 0) {
    throw DataError("stream edge references vertex " + std::to_string(v) +
                    " outside the degree table");
  }
  return static_cast<double>(degrees_.degree[v]);
}

void TraceAccumulator::on_arrival(const ArrivalCounts& counts, Edge e,
                                  std::uint64_t t, std::uint64_t budget) {
  // closed walks through one edge; every edge arrives exactly once
  {
    double inv = 1.0 / (deg(e.u) * deg(e.v));
    tau2_ += 2.0 * inv;
    tau3_ += 6.0 * inv;
    tau4_ += 12.0 * inv + 2.0 * inv * inv;
  }
  if (!counts.wedges.empty()) {
    double w = 1.0 / detection_probability(2, t, budget);
    for (const WedgeEvent& wedge : counts.wedges) {
      double dc = deg(wedge.center);
      tau4_ += 4.0 / (deg(wedge.end_a) * dc * dc * deg(wedge.end_b)) * w;
    }
  }
  if (!counts.triangle_thirds.empty()) {
    double w = 1.0 / detection_probability(3, t, budget);
    double duv = deg(e.u) * deg(e.v);
    for (VertexId third : counts.triangle_thirds) {
      double share = w / (duv * deg(third));
      tau3_ -= 6.0 * share;
      tau4_ -= 24.0 * share;
    }
  }
  if (!counts.cycles4.empty()) {
    double w = 1.0 / detection_probability(4, t, budget);
    for (const FourSetEvent& cyc : counts.cycles4) {
      double denom = deg(cyc.verts[0]) * deg(cyc.verts[1]) *
                     deg(cyc.verts[2]) * deg(cyc.verts[3]);
      tau4_ += 8.0 / denom * cyc.count * w;
    }
  }
}

TraceEstimates TraceAccumulator::finish() const {
  TraceEstimates out;
  double np = static_cast<double>(degrees_.num_positive);
  out.tr_identity = static_cast<double>(num_vertices_);
  out.tr_laplacian = np;
  out.tau2 = tau2_ + np;
  out.tau3 = tau3_ + np;
  out.tau4 = tau4_ + np;
  return out;
}

TraceEstimates trace_estimates(const PreparedStream& stream,
                               const DegreeTable& degrees,
                               std::uint64_t budget, std::uint64_t seed) {
  TraceAccumulator acc(degrees, stream.num_vertices);
  std::vector<ArrivalObserver*> observers{&acc};
  stream_drive(stream, observers, budget, seed);
  return acc.finish();
}

double taylor_spectral_sum(const TraceEstimates& traces, double j,
                           SpectralKernel kernel) {
  double j2 = j * j;
  if (kernel == SpectralKernel::kHeat) {
    return traces.tr_identity - j * traces.tr_laplacian +
           j2 / 2.0 * traces.tau2 - j2 * j / 6.0 * traces.tau3 +
           j2 * j2 / 24.0 * traces.tau4;
  }
  return traces.tr_identity - j2 / 2.0 * traces.tau2 +
         j2 * j2 / 24.0 * traces.tau4;
}

double normalization_factor(SpectralNorm norm, SpectralKernel kernel,
                            std::uint64_t num_vertices, double j) {
  if (norm == SpectralNorm::kNone) return 1.0;
  if (num_vertices == 0) {
    throw ConfigError("normalized spectral sums need a nonempty graph");
  }
  double n = static_cast<double>(num_vertices);
  if (norm == SpectralNorm::kEmpty) return 1.0 / n;
  // complete-graph reference: one zero eigenvalue, n-1 at n/(n-1); the
  // pinned form uses exp(-j) and cos(j) for the nonzero block
  if (kernel == SpectralKernel::kHeat) {
    return 1.0 / (1.0 + (n - 1.0) * std::exp(-j));
  }
  return 1.0 / (1.0 + (n - 1.0) * std::cos(j));
}

const std::array<double, kSantaDimension>& santa_scales() {
  static const std::array<double, kSantaDimension> scales = [] {
    std::array<double, kSantaDimension> s{};
    for (std::size_t k = 0; k < kSantaDimension; ++k) {
      double exponent = -3.0 + 3.0 * static_cast<double>(k) / 59.0;
      s[k] = std::pow(10.0, exponent);
    }
    return s;
  }();
  return scales;
}

SantaDescriptor assemble_santa(const TraceEstimates& traces,
                               SantaVariant variant,
                               std::uint64_t num_vertices) {
  SantaDescriptor out;
  out.variant = variant;
  const auto& scales = santa_scales();
  for (std::size_t k = 0; k < kSantaDimension; ++k) {
    double j = scales[k];
    out.values[k] = normalization_factor(variant.norm, variant.kernel,
                                         num_vertices, j) *
                    taylor_spectral_sum(traces, j, variant.kernel);
  }
  return out;
}

}  // namespace streamdesc
