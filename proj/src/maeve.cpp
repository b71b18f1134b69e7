#include "streamdesc/maeve.hpp"

#include <cmath>

namespace streamdesc {

MaeveAccumulator::MaeveAccumulator(VertexId num_vertices)
    : degree_(num_vertices, 0),
      triangle_(num_vertices, 0.0),
      path_ends_(num_vertices, 0.0) {}

void MaeveAccumulator::on_arrival(const ArrivalCounts& counts, Edge e,
                                  std::uint64_t t, std::uint64_t budget) {
  ++degree_[e.u];
  ++degree_[e.v];

  if (!counts.triangle_thirds.empty()) {
    double w = 1.0 / detection_probability(3, t, budget);
    for (VertexId third : counts.triangle_thirds) {
      triangle_[e.u] += w;
      triangle_[e.v] += w;
      triangle_[third] += w;
    }
  }
  if (!counts.wedges.empty()) {
    double w = 1.0 / detection_probability(2, t, budget);
    for (const WedgeEvent& wedge : counts.wedges) {
      path_ends_[wedge.end_a] += w;
      path_ends_[wedge.end_b] += w;
    }
  }
}

std::array<double, kMaeveFeatureCount> maeve_vertex_features(
    double degree, double triangles, double path_ends) {
  std::array<double, kMaeveFeatureCount> f{};
  f[0] = degree;
  f[1] = degree >= 2 ? triangles / (degree * (degree - 1) / 2.0) : 0.0;
  f[2] = degree >= 1 ? 1.0 + path_ends / degree : 0.0;
  f[3] = degree + triangles;
  f[4] = path_ends - 2.0 * triangles;
  return f;
}

std::array<double, kMaeveMomentCount> population_moments(
    const std::vector<double>& values) {
  std::array<double, kMaeveMomentCount> m{};
  if (values.empty()) return m;
  const double n = static_cast<double>(values.size());

  double mean = 0;
  for (double x : values) mean += x;
  mean /= n;

  double m2 = 0, m3 = 0, m4 = 0;
  for (double x : values) {
    double d = x - mean;
    double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;

  double sigma = std::sqrt(m2);
  m[0] = mean;
  m[1] = sigma;
  if (sigma > 0) {
    m[2] = m3 / (sigma * sigma * sigma);
    m[3] = m4 / (m2 * m2);
  }
  return m;
}

MaeveDescriptor assemble_maeve(const std::vector<std::int64_t>& degrees,
                               const std::vector<double>& triangles,
                               const std::vector<double>& path_ends) {
  const std::size_t n = degrees.size();
  if (triangles.size() != n || path_ends.size() != n) {
    throw ConfigError("per-vertex accumulator sizes disagree");
  }

  std::array<std::vector<double>, kMaeveFeatureCount> columns;
  for (auto& col : columns) col.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto f = maeve_vertex_features(static_cast<double>(degrees[v]),
                                   triangles[v], path_ends[v]);
    for (std::size_t k = 0; k < kMaeveFeatureCount; ++k) columns[k][v] = f[k];
  }

  MaeveDescriptor out;
  for (std::size_t k = 0; k < kMaeveFeatureCount; ++k) {
    auto m = population_moments(columns[k]);
    for (std::size_t j = 0; j < kMaeveMomentCount; ++j) {
      out.values[k * kMaeveMomentCount + j] = m[j];
    }
  }
  return out;
}

}  // namespace streamdesc
