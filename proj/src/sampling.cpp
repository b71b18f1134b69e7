#include "streamdesc/sampling.hpp"

#include <algorithm>
#include <string>

namespace streamdesc {

ReservoirSample::ReservoirSample(VertexId num_vertices, std::uint64_t budget,
                                 std::uint64_t seed)
    : budget_(budget), adjacency_(num_vertices), rng_(seed) {
  if (budget == 0) throw ConfigError("sample budget must be positive");
  edges_.reserve(static_cast<std::size_t>(
      std::min<std::uint64_t>(budget, 1u << 20)));
}

void ReservoirSample::link(Edge e) {
  auto& nu = adjacency_[e.u];
  nu.insert(std::lower_bound(nu.begin(), nu.end(), e.v), e.v);
  auto& nv = adjacency_[e.v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), e.u), e.u);
}

void ReservoirSample::unlink(Edge e) {
  auto& nu = adjacency_[e.u];
  nu.erase(std::lower_bound(nu.begin(), nu.end(), e.v));
  auto& nv = adjacency_[e.v];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), e.u));
}

void ReservoirSample::offer(Edge e) {
  ++edges_seen_;
  if (edges_.size() < budget_) {
    edges_.push_back(e);
    link(e);
    return;
  }
  // Algorithm R: keep with probability budget/t, replacing a uniform slot.
  std::uint64_t j = rng_.below(edges_seen_);
  if (j < budget_) {
    unlink(edges_[j]);
    edges_[j] = e;
    link(e);
  }
}

bool ReservoirSample::has_edge(VertexId u, VertexId v) const {
  const auto& nu = adjacency_[u];
  const auto& nv = adjacency_[v];
  const auto& smaller = nu.size() <= nv.size() ? nu : nv;
  VertexId probe = nu.size() <= nv.size() ? v : u;
  return std::binary_search(smaller.begin(), smaller.end(), probe);
}

double detection_probability(std::uint32_t subgraph_edges, std::uint64_t t,
                             std::uint64_t budget) {
  if (subgraph_edges == 0) {
    throw ConfigError("subgraph must have at least one edge");
  }
  if (t == 0) throw ConfigError("arrival index is 1-based");
  if (budget + 1 < subgraph_edges) {
    throw ConfigError("budget " + std::to_string(budget) +
                      " cannot hold a subgraph with " +
                      std::to_string(subgraph_edges) + " edges");
  }
  if (t - 1 <= budget) return 1.0;
  double p = 1.0;
  for (std::uint32_t i = 0; i + 1 < subgraph_edges; ++i) {
    p *= static_cast<double>(budget - i) / static_cast<double>(t - 1 - i);
  }
  return p < 1.0 ? p : 1.0;
}

}  // namespace streamdesc
