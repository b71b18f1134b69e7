#include "streamdesc/enumeration.hpp"

#include <algorithm>

#include "streamdesc/catalog.hpp"

namespace streamdesc {

void ArrivalCounts::clear() {
  triangle_thirds.clear();
  wedges.clear();
  paths4.clear();
  paws.clear();
  cycles4.clear();
  diamonds.clear();
  k4s.clear();
}

void triangles_containing(const ReservoirSample& sample, Edge e,
                          std::vector<VertexId>& out) {
  out.clear();
  const auto& nu = sample.neighbors(e.u);
  const auto& nv = sample.neighbors(e.v);
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                        std::back_inserter(out));
}

void wedges_containing(const ReservoirSample& sample, Edge e,
                       std::vector<WedgeEvent>& out) {
  out.clear();
  for (VertexId z : sample.neighbors(e.u)) {
    if (z != e.v) out.push_back(WedgeEvent{e.v, z, e.u});
  }
  for (VertexId z : sample.neighbors(e.v)) {
    if (z != e.u) out.push_back(WedgeEvent{e.u, z, e.v});
  }
}

namespace {

// Pair slots for the vertex tuple (u, v, x, y):
//   0:(u,v) 1:(u,x) 2:(u,y) 3:(v,x) 4:(v,y) 5:(x,y)
// Slot 0 is always the arriving edge.
inline constexpr unsigned kBitUV = 1u << 0;
inline constexpr unsigned kBitUX = 1u << 1;
inline constexpr unsigned kBitUY = 1u << 2;
inline constexpr unsigned kBitVX = 1u << 3;
inline constexpr unsigned kBitVY = 1u << 4;
inline constexpr unsigned kBitXY = 1u << 5;

enum StreamedClass { kIdxPath4, kIdxPaw, kIdxCycle4, kIdxDiamond, kIdxK4 };

struct SubsetCounts {
  std::array<std::uint8_t, 5> per_class{};
};

// For every present-edge mask, the number of edge subsets that contain the
// arriving edge and realize each streamed class. Classification goes
// through the catalog's canonical forms, so the numbers are tied to the
// same taxonomy the descriptor uses.
std::array<SubsetCounts, 64> build_subset_table() {
  const GraphletCatalog& catalog = GraphletCatalog::get();
  std::array<SubsetCounts, 64> table{};
  for (unsigned mask = 0; mask < 64; ++mask) {
    for (unsigned sub = mask;; sub = (sub - 1) & mask) {
      if (sub & kBitUV) {
        switch (catalog.classify(4, sub)) {
          case GraphletClass::kPath4:
            ++table[mask].per_class[kIdxPath4];
            break;
          case GraphletClass::kPaw:
            ++table[mask].per_class[kIdxPaw];
            break;
          case GraphletClass::kCycle4:
            ++table[mask].per_class[kIdxCycle4];
            break;
          case GraphletClass::kDiamond:
            ++table[mask].per_class[kIdxDiamond];
            break;
          case GraphletClass::kComplete4:
            ++table[mask].per_class[kIdxK4];
            break;
          default:
            break;
        }
      }
      if (sub == 0) break;
    }
  }
  return table;
}

const std::array<SubsetCounts, 64>& subset_table() {
  static const auto table = build_subset_table();
  return table;
}

struct Candidate {
  VertexId vertex;
  bool adj_u;
  bool adj_v;
};

void emit(std::vector<FourSetEvent>* lists[5], Edge e, VertexId x, VertexId y,
          const SubsetCounts& counts) {
  for (int c = 0; c < 5; ++c) {
    if (counts.per_class[c]) {
      lists[c]->push_back(
          FourSetEvent{{e.u, e.v, x, y}, counts.per_class[c]});
    }
  }
}

}  // namespace

void connected4_containing(const ReservoirSample& sample, Edge e,
                           ArrivalCounts& out) {
  out.paths4.clear();
  out.paws.clear();
  out.cycles4.clear();
  out.diamonds.clear();
  out.k4s.clear();

  const auto& table = subset_table();
  std::vector<FourSetEvent>* lists[5] = {&out.paths4, &out.paws, &out.cycles4,
                                         &out.diamonds, &out.k4s};

  // One-hop candidates: merged neighbors of u and v, minus the edge itself.
  const auto& nu = sample.neighbors(e.u);
  const auto& nv = sample.neighbors(e.v);
  std::vector<Candidate> hop1;
  hop1.reserve(nu.size() + nv.size());
  {
    std::size_t i = 0, j = 0;
    while (i < nu.size() || j < nv.size()) {
      VertexId z;
      bool au = false, av = false;
      if (j >= nv.size() || (i < nu.size() && nu[i] < nv[j])) {
        z = nu[i++];
        au = true;
      } else if (i >= nu.size() || nv[j] < nu[i]) {
        z = nv[j++];
        av = true;
      } else {
        z = nu[i];
        ++i;
        ++j;
        au = av = true;
      }
      if (z == e.u || z == e.v) continue;
      hop1.push_back(Candidate{z, au, av});
    }
  }

  auto in_hop1 = [&hop1](VertexId z) {
    auto it = std::lower_bound(
        hop1.begin(), hop1.end(), z,
        [](const Candidate& c, VertexId v) { return c.vertex < v; });
    return it != hop1.end() && it->vertex == z;
  };

  for (std::size_t i = 0; i < hop1.size(); ++i) {
    const Candidate& x = hop1[i];
    // pairs of one-hop candidates, each evaluated once
    for (std::size_t j = i + 1; j < hop1.size(); ++j) {
      const Candidate& y = hop1[j];
      unsigned mask = kBitUV;
      if (x.adj_u) mask |= kBitUX;
      if (y.adj_u) mask |= kBitUY;
      if (x.adj_v) mask |= kBitVX;
      if (y.adj_v) mask |= kBitVY;
      if (sample.has_edge(x.vertex, y.vertex)) mask |= kBitXY;
      emit(lists, e, x.vertex, y.vertex, table[mask]);
    }
    // two-hop candidates reachable only through x; these can only extend
    // paths and paws, and the mask needs no adjacency lookups at all
    for (VertexId y : sample.neighbors(x.vertex)) {
      if (y == e.u || y == e.v || in_hop1(y)) continue;
      unsigned mask = kBitUV | kBitXY;
      if (x.adj_u) mask |= kBitUX;
      if (x.adj_v) mask |= kBitVX;
      emit(lists, e, x.vertex, y, table[mask]);
    }
  }
}

void cycles4_containing(const ReservoirSample& sample, Edge e,
                        std::vector<FourSetEvent>& out) {
  out.clear();
  // u - v - a - b - u: a neighbors v, b neighbors u, (a,b) sampled
  for (VertexId a : sample.neighbors(e.v)) {
    if (a == e.u) continue;
    for (VertexId b : sample.neighbors(e.u)) {
      if (b == e.v || b == a) continue;
      if (sample.has_edge(a, b)) {
        out.push_back(FourSetEvent{{e.u, e.v, a, b}, 1});
      }
    }
  }
}

void stream_drive(const PreparedStream& stream,
                  const std::vector<ArrivalObserver*>& observers,
                  std::uint64_t budget, std::uint64_t seed) {
  unsigned need = 0;
  for (const ArrivalObserver* obs : observers) need |= obs->needs();

  ReservoirSample sample(stream.num_vertices, budget, seed);
  ArrivalCounts counts;
  std::uint64_t t = 0;
  for (const Edge& e : stream.edges) {
    ++t;
    if (need & kNeedTriangles) {
      triangles_containing(sample, e, counts.triangle_thirds);
    }
    if (need & kNeedWedges) {
      wedges_containing(sample, e, counts.wedges);
    }
    if (need & kNeedFourConnected) {
      connected4_containing(sample, e, counts);
    } else if (need & kNeedFourCycles) {
      cycles4_containing(sample, e, counts.cycles4);
    }
    for (ArrivalObserver* obs : observers) {
      obs->on_arrival(counts, e, t, budget);
    }
    sample.offer(e);
  }
}

}  // namespace streamdesc
