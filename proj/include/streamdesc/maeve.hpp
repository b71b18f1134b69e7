#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "streamdesc/enumeration.hpp"

namespace streamdesc {

inline constexpr std::size_t kMaeveFeatureCount = 5;
inline constexpr std::size_t kMaeveMomentCount = 4;
inline constexpr std::size_t kMaeveDimension =
    kMaeveFeatureCount * kMaeveMomentCount;

// Per-vertex accumulators for one pass over the stream. Degrees are exact;
// triangle memberships (weight 1/p for all three corners, m=3) and
// three-path endpoint memberships (weight 1/p for both endpoints, m=2)
// are estimated.
class MaeveAccumulator : public ArrivalObserver {
 public:
  explicit MaeveAccumulator(VertexId num_vertices);

  unsigned needs() const override { return kNeedTriangles | kNeedWedges; }
  void on_arrival(const ArrivalCounts& counts, Edge e, std::uint64_t t,
                  std::uint64_t budget) override;

  const std::vector<std::int64_t>& degrees() const { return degree_; }
  const std::vector<double>& triangle_counts() const { return triangle_; }
  const std::vector<double>& path_end_counts() const { return path_ends_; }

 private:
  std::vector<std::int64_t> degree_;
  std::vector<double> triangle_;
  std::vector<double> path_ends_;
};

// (degree, clustering, average neighbor degree, egonet internal edges,
// egonet leaving edges) from the per-vertex counts (d, T, P):
//   clustering     = T / C(d,2), 0 when d < 2
//   avg nbr degree = 1 + P / d, 0 when d = 0
//   egonet edges   = d + T
//   egonet leaving = P - 2 T
std::array<double, kMaeveFeatureCount> maeve_vertex_features(double degree,
                                                             double triangles,
                                                             double path_ends);

// Population moments (mean, stddev, skewness, kurtosis). Zero-variance
// input gives skewness = kurtosis = 0; an empty input gives all zeros.
std::array<double, kMaeveMomentCount> population_moments(
    const std::vector<double>& values);

struct MaeveDescriptor {
  std::array<double, kMaeveDimension> values{};
};

// Feature-major layout: 4 moments of feature 0, then of feature 1, ...
MaeveDescriptor assemble_maeve(const std::vector<std::int64_t>& degrees,
                               const std::vector<double>& triangles,
                               const std::vector<double>& path_ends);

}  // namespace streamdesc
