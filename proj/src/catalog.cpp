#include "streamdesc/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace streamdesc {

std::uint32_t pair_slot(std::uint32_t order, std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  // slots for pairs (a, *) start after all pairs with smaller first vertex
  std::uint32_t base = a * order - a * (a + 1) / 2;
  return base + (b - a - 1);
}

std::uint64_t canonical_mask(std::uint32_t order, std::uint64_t mask) {
  std::array<std::uint32_t, 4> perm{};
  std::iota(perm.begin(), perm.begin() + order, 0u);
  std::uint64_t best = ~0ULL;
  do {
    std::uint64_t remapped = 0;
    for (std::uint32_t a = 0; a < order; ++a) {
      for (std::uint32_t b = a + 1; b < order; ++b) {
        if (mask >> pair_slot(order, a, b) & 1) {
          remapped |= 1ULL << pair_slot(order, perm[a], perm[b]);
        }
      }
    }
    best = std::min(best, remapped);
  } while (std::next_permutation(perm.begin(), perm.begin() + order));
  return best;
}

namespace {

struct Witness {
  GraphletClass cls;
  std::uint32_t order;
  std::initializer_list<std::pair<int, int>> edges;
};

// Hand-written representative of each class; canonicalized for matching.
const std::vector<Witness>& witnesses() {
  static const std::vector<Witness> w = {
      {GraphletClass::kEmpty2, 2, {}},
      {GraphletClass::kSingleEdge, 2, {{0, 1}}},
      {GraphletClass::kEmpty3, 3, {}},
      {GraphletClass::kEdgePlusIsolated, 3, {{0, 1}}},
      {GraphletClass::kWedge, 3, {{0, 1}, {0, 2}}},
      {GraphletClass::kTriangle, 3, {{0, 1}, {0, 2}, {1, 2}}},
      {GraphletClass::kEmpty4, 4, {}},
      {GraphletClass::kEdgePlusTwoIsolated, 4, {{0, 1}}},
      {GraphletClass::kTwoEdgeMatching, 4, {{0, 1}, {2, 3}}},
      {GraphletClass::kWedgePlusIsolated, 4, {{0, 1}, {0, 2}}},
      {GraphletClass::kTrianglePlusIsolated, 4, {{0, 1}, {0, 2}, {1, 2}}},
      {GraphletClass::kPath4, 4, {{0, 1}, {1, 2}, {2, 3}}},
      {GraphletClass::kStar4, 4, {{0, 1}, {0, 2}, {0, 3}}},
      {GraphletClass::kPaw, 4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}},
      {GraphletClass::kCycle4, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
      {GraphletClass::kDiamond, 4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}},
      {GraphletClass::kComplete4,
       4,
       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
  };
  return w;
}

std::uint64_t witness_mask(const Witness& w) {
  std::uint64_t mask = 0;
  for (auto [a, b] : w.edges) {
    mask |= 1ULL << pair_slot(w.order, static_cast<std::uint32_t>(a),
                              static_cast<std::uint32_t>(b));
  }
  return mask;
}

int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

}  // namespace

GraphletCatalog::GraphletCatalog() {
  // canonical mask -> class, per order
  std::array<std::map<std::uint64_t, GraphletClass>, 5> by_canonical;
  for (const Witness& w : witnesses()) {
    by_canonical[w.order][canonical_mask(w.order, witness_mask(w))] = w.cls;
  }

  std::vector<CatalogEntry> generated;
  for (std::uint32_t order = 2; order <= 4; ++order) {
    std::uint32_t slots = order * (order - 1) / 2;
    std::map<std::uint64_t, CatalogEntry> reps;
    for (std::uint64_t mask = 0; mask < (1ULL << slots); ++mask) {
      std::uint64_t canon = canonical_mask(order, mask);
      if (reps.count(canon)) continue;
      auto it = by_canonical[order].find(canon);
      if (it == by_canonical[order].end()) {
        throw Error("graph class generation does not match witnesses");
      }
      reps[canon] = CatalogEntry{it->second, order,
                                 static_cast<std::uint32_t>(popcount64(canon)),
                                 canon};
    }
    std::vector<CatalogEntry> block;
    for (auto& [canon, entry] : reps) block.push_back(entry);
    std::sort(block.begin(), block.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                if (a.edge_count != b.edge_count) return a.edge_count < b.edge_count;
                return a.canonical < b.canonical;
              });
    generated.insert(generated.end(), block.begin(), block.end());
  }
  if (generated.size() != kNumGraphletClasses) {
    throw Error("expected 17 graph classes on 2..4 vertices");
  }
  std::copy(generated.begin(), generated.end(), entries_.begin());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    index_[static_cast<std::size_t>(entries_[i].cls)] = i;
  }
}

const GraphletCatalog& GraphletCatalog::get() {
  static const GraphletCatalog catalog;
  return catalog;
}

std::pair<std::size_t, std::size_t> GraphletCatalog::order_block(
    std::uint32_t order) const {
  switch (order) {
    case 2:
      return {0, 2};
    case 3:
      return {2, 6};
    case 4:
      return {6, kNumGraphletClasses};
    default:
      throw ConfigError("catalog covers orders 2..4");
  }
}

GraphletClass GraphletCatalog::classify(std::uint32_t order,
                                        std::uint64_t mask) const {
  std::uint64_t canon = canonical_mask(order, mask);
  auto [begin, end] = order_block(order);
  for (std::size_t i = begin; i < end; ++i) {
    if (entries_[i].canonical == canon) return entries_[i].cls;
  }
  throw Error("unclassifiable mask");
}

OverlapMatrix::OverlapMatrix() {
  const GraphletCatalog& catalog = GraphletCatalog::get();
  const auto& entries = catalog.entries();
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const CatalogEntry& host = entries[j];
    // iterate every edge subset of the representative of j
    for (std::uint64_t sub = host.canonical;;
         sub = (sub - 1) & host.canonical) {
      GraphletClass cls = catalog.classify(host.order, sub);
      forward_[catalog.index_of(cls)][j] += 1;
      if (sub == 0) break;
    }
  }

  // Invert the unit upper-triangular matrix by back-substitution; the
  // result is integral.
  for (std::size_t i = 0; i < kNumGraphletClasses; ++i) inverse_[i][i] = 1;
  for (std::size_t j = 0; j < kNumGraphletClasses; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      std::int64_t acc = 0;
      for (std::size_t k = i + 1; k <= j; ++k) {
        acc += forward_[i][k] * inverse_[k][j];
      }
      inverse_[i][j] = -acc;
    }
  }
}

const OverlapMatrix& OverlapMatrix::get() {
  static const OverlapMatrix matrix;
  return matrix;
}

std::array<double, kNumGraphletClasses> OverlapMatrix::apply_inverse(
    const std::array<double, kNumGraphletClasses>& h) const {
  std::array<double, kNumGraphletClasses> x{};
  for (std::size_t i = 0; i < kNumGraphletClasses; ++i) {
    double acc = 0;
    for (std::size_t j = i; j < kNumGraphletClasses; ++j) {
      if (inverse_[i][j] != 0) acc += static_cast<double>(inverse_[i][j]) * h[j];
    }
    x[i] = acc;
  }
  return x;
}

std::array<double, kNumGraphletClasses> OverlapMatrix::apply(
    const std::array<double, kNumGraphletClasses>& x) const {
  std::array<double, kNumGraphletClasses> h{};
  for (std::size_t i = 0; i < kNumGraphletClasses; ++i) {
    double acc = 0;
    for (std::size_t j = i; j < kNumGraphletClasses; ++j) {
      if (forward_[i][j] != 0) acc += static_cast<double>(forward_[i][j]) * x[j];
    }
    h[i] = acc;
  }
  return h;
}

}  // namespace streamdesc
