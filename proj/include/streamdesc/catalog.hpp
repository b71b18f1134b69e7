#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "streamdesc/common.hpp"

namespace streamdesc {

// The 17 isomorphism classes of graphs on 2, 3 and 4 vertices.
enum class GraphletClass : std::uint8_t {
  kEmpty2,
  kSingleEdge,
  kEmpty3,
  kEdgePlusIsolated,
  kWedge,
  kTriangle,
  kEmpty4,
  kEdgePlusTwoIsolated,
  kTwoEdgeMatching,
  kWedgePlusIsolated,
  kTrianglePlusIsolated,
  kPath4,
  kStar4,
  kPaw,
  kCycle4,
  kDiamond,
  kComplete4,
};

inline constexpr std::size_t kNumGraphletClasses = 17;

// Edge masks index vertex pairs of a k-vertex graph in lexicographic order:
// k=4 -> (0,1),(0,2),(0,3),(1,2),(1,3),(2,3); k=3 -> (0,1),(0,2),(1,2).
std::uint32_t pair_slot(std::uint32_t order, std::uint32_t a, std::uint32_t b);

// Minimum mask over all vertex permutations; equal masks iff isomorphic.
std::uint64_t canonical_mask(std::uint32_t order, std::uint64_t mask);

struct CatalogEntry {
  GraphletClass cls;
  std::uint32_t order;
  std::uint32_t edge_count;
  std::uint64_t canonical;  // canonical edge mask of the representative
};

// Catalog of the 17 classes, ordered by (order asc, edge count asc,
// canonical mask asc). Built once by exhaustive generation over all masks
// followed by isomorphism dedupe; representatives are matched to the class
// enum through hand-written witnesses.
class GraphletCatalog {
 public:
  static const GraphletCatalog& get();

  const std::array<CatalogEntry, kNumGraphletClasses>& entries() const {
    return entries_;
  }
  std::size_t index_of(GraphletClass c) const {
    return index_[static_cast<std::size_t>(c)];
  }
  const CatalogEntry& entry(GraphletClass c) const {
    return entries_[index_of(c)];
  }
  // Half-open index range of the classes with the given order.
  std::pair<std::size_t, std::size_t> order_block(std::uint32_t order) const;

  // Isomorphism class of an arbitrary edge mask on `order` vertices.
  GraphletClass classify(std::uint32_t order, std::uint64_t mask) const;

 private:
  GraphletCatalog();
  std::array<CatalogEntry, kNumGraphletClasses> entries_;
  std::array<std::size_t, kNumGraphletClasses> index_;
};

// Same-order overlap counts: at(i, j) is the number of edge subsets of
// catalog graph j that are isomorphic to catalog graph i (0 across orders).
// Unit upper triangular under catalog order, so the inverse is integral.
class OverlapMatrix {
 public:
  static const OverlapMatrix& get();

  std::int64_t at(std::size_t i, std::size_t j) const {
    return forward_[i][j];
  }
  std::int64_t inverse_at(std::size_t i, std::size_t j) const {
    return inverse_[i][j];
  }

  // x = O^-1 h, converting subgraph counts to induced counts.
  std::array<double, kNumGraphletClasses> apply_inverse(
      const std::array<double, kNumGraphletClasses>& h) const;
  // h = O x, the exact inverse direction used for round-trip checks.
  std::array<double, kNumGraphletClasses> apply(
      const std::array<double, kNumGraphletClasses>& x) const;

 private:
  OverlapMatrix();
  using Matrix =
      std::array<std::array<std::int64_t, kNumGraphletClasses>, kNumGraphletClasses>;
  Matrix forward_{};
  Matrix inverse_{};
};

}  // namespace streamdesc
