#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "streamdesc/common.hpp"
#include "streamdesc/graph_io.hpp"
#include "streamdesc/sampling.hpp"

namespace streamdesc {

// A two-edge path discovered at an arrival: (end_a - center - end_b) where
// the arriving edge is one of its two edges.
struct WedgeEvent {
  VertexId end_a;
  VertexId end_b;
  VertexId center;
};

// Instances of one connected 4-vertex class found on a vertex set at one
// arrival. `count` is the number of distinct edge subsets on `verts` that
// contain the arriving edge and realize the class.
struct FourSetEvent {
  std::array<VertexId, 4> verts;
  std::uint32_t count;
};

// Streamed connected 4-vertex classes, with their edge counts m.
inline constexpr std::uint32_t kPath4Edges = 3;
inline constexpr std::uint32_t kPawEdges = 4;
inline constexpr std::uint32_t kCycle4Edges = 4;
inline constexpr std::uint32_t kDiamondEdges = 5;
inline constexpr std::uint32_t kComplete4Edges = 6;

// Everything found at one arrival against the sample plus the arriving edge.
struct ArrivalCounts {
  std::vector<VertexId> triangle_thirds;
  std::vector<WedgeEvent> wedges;
  std::vector<FourSetEvent> paths4;
  std::vector<FourSetEvent> paws;
  std::vector<FourSetEvent> cycles4;
  std::vector<FourSetEvent> diamonds;
  std::vector<FourSetEvent> k4s;

  void clear();
};

// Third vertices w such that (u,w) and (v,w) are both in the sample.
void triangles_containing(const ReservoirSample& sample, Edge e,
                          std::vector<VertexId>& out);

// Two-edge paths that the arriving edge belongs to: for z in N(u)\{v} the
// path (v, z) centered at u, and symmetrically for N(v)\{u}.
void wedges_containing(const ReservoirSample& sample, Edge e,
                       std::vector<WedgeEvent>& out);

// All (vertex set, edge subset) instances of the connected 4-vertex classes
// {path, paw, cycle, diamond, complete} that contain the arriving edge.
// Candidates live within two hops of the arriving edge's endpoints.
void connected4_containing(const ReservoirSample& sample, Edge e,
                           ArrivalCounts& out);

// Just the 4-cycles through the arriving edge; cheaper than the full
// 4-vertex classification when nothing else is needed.
void cycles4_containing(const ReservoirSample& sample, Edge e,
                        std::vector<FourSetEvent>& out);

// What an estimator wants computed at each arrival.
enum ArrivalNeeds : unsigned {
  kNeedTriangles = 1u << 0,
  kNeedWedges = 1u << 1,
  kNeedFourConnected = 1u << 2,
  kNeedFourCycles = 1u << 3,
};

class ArrivalObserver {
 public:
  virtual ~ArrivalObserver() = default;
  virtual unsigned needs() const = 0;
  virtual void on_arrival(const ArrivalCounts& counts, Edge e, std::uint64_t t,
                          std::uint64_t budget) = 0;
};

// One pass: at each arrival t the union of observer needs is enumerated
// against the current sample, every observer sees the result, and only then
// is the edge offered to the reservoir.
void stream_drive(const PreparedStream& stream,
                  const std::vector<ArrivalObserver*>& observers,
                  std::uint64_t budget, std::uint64_t seed);

}  // namespace streamdesc
