#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "streamdesc/catalog.hpp"
#include "streamdesc/gabe.hpp"
#include "streamdesc/graph_io.hpp"
#include "streamdesc/maeve.hpp"
#include "streamdesc/santa.hpp"

namespace streamdesc {

// Brute-force reference side. Dense adjacency, exhaustive enumeration, no
// sampling, no reservoir, no per-arrival machinery: results from here are
// the ground truth that the streaming estimators are measured against.
class DenseGraph {
 public:
  explicit DenseGraph(VertexId n);
  static DenseGraph from_stream(const PreparedStream& stream);

  void add_edge(VertexId u, VertexId v);
  bool has(VertexId u, VertexId v) const { return adj_[idx(u, v)] != 0; }
  VertexId size() const { return n_; }
  std::int64_t degree(VertexId v) const { return degree_[v]; }
  std::int64_t num_edges() const { return num_edges_; }

 private:
  std::size_t idx(VertexId u, VertexId v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }
  VertexId n_;
  std::int64_t num_edges_{0};
  std::vector<std::uint8_t> adj_;
  std::vector<std::int64_t> degree_;
};

// Counts of all 17 classes as subgraphs (vertex subset plus edge subset),
// indexed in catalog order. Exhaustive over vertex subsets; |V| <= 14.
std::array<std::int64_t, kNumGraphletClasses> exact_subgraph_counts(
    const DenseGraph& g);

// Counts as induced subgraphs (vertex subsets only); |V| <= 14.
std::array<std::int64_t, kNumGraphletClasses> exact_induced_counts(
    const DenseGraph& g);

// Per-vertex degree, triangle membership count, and count of three-paths
// with the vertex as an endpoint; |V| <= 500.
struct ExactVertexCounts {
  std::vector<std::int64_t> degree;
  std::vector<std::int64_t> triangles;
  std::vector<std::int64_t> path_ends;
};
ExactVertexCounts exact_vertex_counts(const DenseGraph& g);

// tr(L^1..L^4) of the normalized Laplacian via dense matrix products;
// |V| <= 2000.
struct ExactTraces {
  double tr1{0};
  double tr2{0};
  double tr3{0};
  double tr4{0};
  std::int64_t num_positive{0};
};
ExactTraces exact_traces(const DenseGraph& g);

// Spectral sums straight from an eigenvalue list, with the same
// normalization references as the streamed descriptor.
double closed_form_spectral_sum(std::span<const double> eigenvalues, double j,
                                SantaVariant variant,
                                std::uint64_t num_vertices);

// Reference descriptors assembled from exhaustive counts. The graphlet one
// goes straight from induced counts to shares, never touching the overlap
// inversion used by the streaming side.
GabeDescriptor oracle_gabe_descriptor(const DenseGraph& g);
MaeveDescriptor oracle_maeve_descriptor(const DenseGraph& g);

// Serialized oracle results for one graph, as a JSON object string; parts
// whose size guard fails are recorded as skipped.
std::string oracle_record_json(std::int64_t graph_id, std::int64_t label,
                               const DenseGraph& g);

}  // namespace streamdesc
