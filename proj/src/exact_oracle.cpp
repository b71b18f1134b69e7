#include "streamdesc/exact_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace streamdesc {

DenseGraph::DenseGraph(VertexId n)
    : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), degree_(n, 0) {}

DenseGraph DenseGraph::from_stream(const PreparedStream& stream) {
  DenseGraph g(stream.num_vertices);
  for (const Edge& e : stream.edges) g.add_edge(e.u, e.v);
  return g;
}

void DenseGraph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw DataError("oracle graphs are loop-free");
  if (u >= n_ || v >= n_) throw DataError("edge endpoint out of range");
  if (adj_[idx(u, v)]) return;
  adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
  ++degree_[u];
  ++degree_[v];
  ++num_edges_;
}

namespace {

// Classification of small edge masks by edge count and degree multiset.
// Deliberately rule-based: the streaming side classifies through canonical
// forms, so agreement between the two is a real check, not an echo.

GraphletClass classify3(unsigned mask) {
  switch (__builtin_popcount(mask)) {
    case 0:
      return GraphletClass::kEmpty3;
    case 1:
      return GraphletClass::kEdgePlusIsolated;
    case 2:
      return GraphletClass::kWedge;
    default:
      return GraphletClass::kTriangle;
  }
}

// slots (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
constexpr int kSlotEnds[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

GraphletClass classify4(unsigned mask) {
  int deg[4] = {0, 0, 0, 0};
  for (int s = 0; s < 6; ++s) {
    if (mask >> s & 1) {
      ++deg[kSlotEnds[s][0]];
      ++deg[kSlotEnds[s][1]];
    }
  }
  int sorted[4] = {deg[0], deg[1], deg[2], deg[3]};
  std::sort(sorted, sorted + 4, std::greater<int>());
  switch (__builtin_popcount(mask)) {
    case 0:
      return GraphletClass::kEmpty4;
    case 1:
      return GraphletClass::kEdgePlusTwoIsolated;
    case 2:
      return sorted[0] == 2 ? GraphletClass::kWedgePlusIsolated
                            : GraphletClass::kTwoEdgeMatching;
    case 3:
      if (sorted[0] == 3) return GraphletClass::kStar4;
      if (sorted[3] == 0) return GraphletClass::kTrianglePlusIsolated;
      return GraphletClass::kPath4;
    case 4:
      return sorted[0] == 3 ? GraphletClass::kPaw : GraphletClass::kCycle4;
    case 5:
      return GraphletClass::kDiamond;
    default:
      return GraphletClass::kComplete4;
  }
}

struct SubsetTables {
  // per induced mask: class of the mask itself, and per-class counts of all
  // edge subsets of the mask
  std::array<std::uint8_t, 8> induced3;
  std::array<std::array<std::uint16_t, kNumGraphletClasses>, 8> subsets3{};
  std::array<std::uint8_t, 64> induced4;
  std::array<std::array<std::uint16_t, kNumGraphletClasses>, 64> subsets4{};
};

const SubsetTables& subset_tables() {
  static const SubsetTables tables = [] {
    const GraphletCatalog& catalog = GraphletCatalog::get();
    SubsetTables t{};
    for (unsigned mask = 0; mask < 8; ++mask) {
      t.induced3[mask] =
          static_cast<std::uint8_t>(catalog.index_of(classify3(mask)));
      for (unsigned sub = mask;; sub = (sub - 1) & mask) {
        ++t.subsets3[mask][catalog.index_of(classify3(sub))];
        if (sub == 0) break;
      }
    }
    for (unsigned mask = 0; mask < 64; ++mask) {
      t.induced4[mask] =
          static_cast<std::uint8_t>(catalog.index_of(classify4(mask)));
      for (unsigned sub = mask;; sub = (sub - 1) & mask) {
        ++t.subsets4[mask][catalog.index_of(classify4(sub))];
        if (sub == 0) break;
      }
    }
    return t;
  }();
  return tables;
}

void check_size(const DenseGraph& g, VertexId limit, const char* what) {
  if (g.size() > limit) {
    throw ConfigError(std::string(what) + " is exhaustive; refusing more than " +
                      std::to_string(limit) + " vertices");
  }
}

unsigned induced_mask3(const DenseGraph& g, VertexId a, VertexId b, VertexId c) {
  unsigned mask = 0;
  if (g.has(a, b)) mask |= 1u << 0;
  if (g.has(a, c)) mask |= 1u << 1;
  if (g.has(b, c)) mask |= 1u << 2;
  return mask;
}

unsigned induced_mask4(const DenseGraph& g, VertexId a, VertexId b, VertexId c,
                       VertexId d) {
  unsigned mask = 0;
  if (g.has(a, b)) mask |= 1u << 0;
  if (g.has(a, c)) mask |= 1u << 1;
  if (g.has(a, d)) mask |= 1u << 2;
  if (g.has(b, c)) mask |= 1u << 3;
  if (g.has(b, d)) mask |= 1u << 4;
  if (g.has(c, d)) mask |= 1u << 5;
  return mask;
}

template <bool kInduced>
std::array<std::int64_t, kNumGraphletClasses> exhaustive_counts(
    const DenseGraph& g) {
  check_size(g, 14, "subgraph counting");
  const GraphletCatalog& catalog = GraphletCatalog::get();
  const SubsetTables& tables = subset_tables();
  std::array<std::int64_t, kNumGraphletClasses> counts{};

  const std::size_t i_empty2 = catalog.index_of(GraphletClass::kEmpty2);
  const std::size_t i_edge = catalog.index_of(GraphletClass::kSingleEdge);

  const VertexId n = g.size();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      bool edge = g.has(a, b);
      if (kInduced) {
        ++counts[edge ? i_edge : i_empty2];
      } else {
        ++counts[i_empty2];
        if (edge) ++counts[i_edge];
      }
      for (VertexId c = b + 1; c < n; ++c) {
        unsigned m3 = induced_mask3(g, a, b, c);
        if (kInduced) {
          ++counts[tables.induced3[m3]];
        } else {
          for (std::size_t i = 2; i < 6; ++i) {
            counts[i] += tables.subsets3[m3][i];
          }
        }
        for (VertexId d = c + 1; d < n; ++d) {
          unsigned m4 = induced_mask4(g, a, b, c, d);
          if (kInduced) {
            ++counts[tables.induced4[m4]];
          } else {
            for (std::size_t i = 6; i < kNumGraphletClasses; ++i) {
              counts[i] += tables.subsets4[m4][i];
            }
          }
        }
      }
    }
  }
  return counts;
}

}  // namespace

std::array<std::int64_t, kNumGraphletClasses> exact_subgraph_counts(
    const DenseGraph& g) {
  return exhaustive_counts<false>(g);
}

std::array<std::int64_t, kNumGraphletClasses> exact_induced_counts(
    const DenseGraph& g) {
  return exhaustive_counts<true>(g);
}

ExactVertexCounts exact_vertex_counts(const DenseGraph& g) {
  check_size(g, 500, "per-vertex counting");
  const VertexId n = g.size();
  ExactVertexCounts out;
  out.degree.resize(n);
  out.triangles.assign(n, 0);
  out.path_ends.assign(n, 0);

  std::vector<std::vector<VertexId>> nbrs(n);
  for (VertexId v = 0; v < n; ++v) {
    out.degree[v] = g.degree(v);
    for (VertexId w = 0; w < n; ++w) {
      if (g.has(v, w)) nbrs[v].push_back(w);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    const auto& nb = nbrs[v];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      out.path_ends[v] += g.degree(nb[i]) - 1;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has(nb[i], nb[j])) ++out.triangles[v];
      }
    }
  }
  return out;
}

ExactTraces exact_traces(const DenseGraph& g) {
  check_size(g, 2000, "trace computation");
  const std::size_t n = g.size();
  ExactTraces out;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) > 0) ++out.num_positive;
  }
  out.tr1 = static_cast<double>(out.num_positive);

  // normalized Laplacian: diag 1 for positive-degree vertices,
  // off-diagonal -1/sqrt(d_u d_v) on edges
  std::vector<double> L(n * n, 0.0);
  for (VertexId u = 0; u < n; ++u) {
    if (g.degree(u) > 0) L[u * n + u] = 1.0;
    for (VertexId v = 0; v < n; ++v) {
      if (g.has(u, v)) {
        L[u * n + v] = -1.0 / std::sqrt(static_cast<double>(g.degree(u)) *
                                        static_cast<double>(g.degree(v)));
      }
    }
  }

  std::vector<double> L2(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      double lik = L[i * n + k];
      if (lik == 0.0) continue;
      const double* row = &L[k * n];
      double* out_row = &L2[i * n];
      for (std::size_t j = 0; j < n; ++j) out_row[j] += lik * row[j];
    }
  }

  // L is symmetric, so tr(L^3) = <L2, L> and tr(L^4) = <L2, L2>
  double tr2 = 0, tr3 = 0, tr4 = 0;
  for (std::size_t i = 0; i < n; ++i) tr2 += L2[i * n + i];
  for (std::size_t i = 0; i < n * n; ++i) {
    tr3 += L2[i] * L[i];
    tr4 += L2[i] * L2[i];
  }
  out.tr2 = tr2;
  out.tr3 = tr3;
  out.tr4 = tr4;
  return out;
}

double closed_form_spectral_sum(std::span<const double> eigenvalues, double j,
                                SantaVariant variant,
                                std::uint64_t num_vertices) {
  double sum = 0;
  for (double lambda : eigenvalues) {
    sum += variant.kernel == SpectralKernel::kHeat ? std::exp(-j * lambda)
                                                   : std::cos(j * lambda);
  }
  return normalization_factor(variant.norm, variant.kernel, num_vertices, j) *
         sum;
}

GabeDescriptor oracle_gabe_descriptor(const DenseGraph& g) {
  const GraphletCatalog& catalog = GraphletCatalog::get();
  const auto induced = exact_induced_counts(g);
  GabeDescriptor out;
  out.degenerate = g.size() < 4;
  for (std::uint32_t order = 2; order <= 4; ++order) {
    auto [begin, end] = catalog.order_block(order);
    double denom = binomial(static_cast<double>(g.size()), order);
    for (std::size_t i = begin; i < end; ++i) {
      out.values[i] =
          denom > 0 ? static_cast<double>(induced[i]) / denom : 0.0;
    }
  }
  return out;
}

MaeveDescriptor oracle_maeve_descriptor(const DenseGraph& g) {
  const ExactVertexCounts counts = exact_vertex_counts(g);
  std::vector<double> triangles(counts.triangles.begin(),
                                counts.triangles.end());
  std::vector<double> path_ends(counts.path_ends.begin(),
                                counts.path_ends.end());
  return assemble_maeve(counts.degree, triangles, path_ends);
}

std::string oracle_record_json(std::int64_t graph_id, std::int64_t label,
                               const DenseGraph& g) {
  nlohmann::json rec;
  rec["graph_id"] = graph_id;
  rec["label"] = label;
  rec["num_vertices"] = g.size();
  rec["num_edges"] = g.num_edges();

  if (g.size() <= 14) {
    const auto sub = exact_subgraph_counts(g);
    const auto ind = exact_induced_counts(g);
    rec["subgraph_counts"] = sub;
    rec["induced_counts"] = ind;
    rec["graphlet_descriptor"] = oracle_gabe_descriptor(g).values;
  } else {
    rec["skipped_counts"] = "graph exceeds the 14-vertex exhaustive limit";
  }
  if (g.size() <= 500) {
    const auto counts = exact_vertex_counts(g);
    rec["vertex_degree"] = counts.degree;
    rec["vertex_triangles"] = counts.triangles;
    rec["vertex_path_ends"] = counts.path_ends;
    rec["neighborhood_descriptor"] = oracle_maeve_descriptor(g).values;
  } else {
    rec["skipped_vertex_counts"] = "graph exceeds the 500-vertex limit";
  }
  if (g.size() <= 2000) {
    const auto traces = exact_traces(g);
    rec["traces"] = {{"tr1", traces.tr1},
                     {"tr2", traces.tr2},
                     {"tr3", traces.tr3},
                     {"tr4", traces.tr4},
                     {"positive_degree_vertices", traces.num_positive}};
  } else {
    rec["skipped_traces"] = "graph exceeds the 2000-vertex limit";
  }
  return rec.dump();
}

}  // namespace streamdesc
