#pragma once

#include <cstdint>
#include <vector>

#include "streamdesc/common.hpp"
#include "streamdesc/rng.hpp"

namespace streamdesc {

// Fixed-budget uniform reservoir over the edges seen so far, with a sorted
// adjacency view of the stored edges. After t offers the reservoir holds
// min(budget, t) edges, each t-subset equally likely.
//
// Precondition for offer(): the edge is not already stored. Prepared streams
// guarantee this because duplicates are removed up front.
class ReservoirSample {
 public:
  ReservoirSample(VertexId num_vertices, std::uint64_t budget,
                  std::uint64_t seed);

  void offer(Edge e);

  const std::vector<VertexId>& neighbors(VertexId v) const {
    return adjacency_[v];
  }
  bool has_edge(VertexId u, VertexId v) const;

  std::uint64_t budget() const { return budget_; }
  std::uint64_t edges_seen() const { return edges_seen_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexId num_vertices() const {
    return static_cast<VertexId>(adjacency_.size());
  }

 private:
  void link(Edge e);
  void unlink(Edge e);

  std::uint64_t budget_;
  std::uint64_t edges_seen_{0};
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  Rng rng_;
};

// Probability that the other m-1 edges of a subgraph instance completed by
// the arrival at time t are all still in a budget-b reservoir:
//   min{1, prod_{i=0}^{m-2} (b - i) / (t - 1 - i)}
// Exactly 1 while t - 1 <= b. Non-increasing in t for fixed m, b.
double detection_probability(std::uint32_t subgraph_edges, std::uint64_t t,
                             std::uint64_t budget);

}  // namespace streamdesc
