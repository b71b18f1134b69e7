#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "streamdesc/catalog.hpp"
#include "streamdesc/enumeration.hpp"

namespace streamdesc {

inline constexpr std::size_t kGabeDimension = kNumGraphletClasses;

// Estimated counts of the six connected classes that need sampling.
struct GabeRawCounts {
  double triangle{0};
  double path4{0};
  double paw{0};
  double cycle4{0};
  double diamond{0};
  double k4{0};
};

// Exact stream-side quantities: |V|, |E| and the degree-derived counts
// wedge = sum C(d,2) and claw = sum C(d,3).
struct GabeExactCounts {
  std::uint64_t num_vertices{0};
  std::uint64_t num_edges{0};
  double wedge{0};
  double claw{0};
};

// Per-arrival estimator. Degrees and the edge count are exact because every
// edge arrives exactly once; the six connected 4-vertex-or-triangle counts
// are inverse-probability weighted.
class GabeAccumulator : public ArrivalObserver {
 public:
  explicit GabeAccumulator(VertexId num_vertices);

  unsigned needs() const override {
    return kNeedTriangles | kNeedFourConnected;
  }
  void on_arrival(const ArrivalCounts& counts, Edge e, std::uint64_t t,
                  std::uint64_t budget) override;

  GabeRawCounts raw() const { return raw_; }
  GabeExactCounts exact() const;

 private:
  GabeRawCounts raw_;
  std::uint64_t num_edges_{0};
  std::vector<std::int64_t> degree_;
};

struct GabeDescriptor {
  std::array<double, kGabeDimension> values{};
  // set when |V| < 4 forces one or more order blocks to zero
  bool degenerate{false};
};

// n choose k as a double, 0 when n < k.
double binomial(double n, std::uint32_t k);

// Full 17-entry subgraph-count vector in catalog order: streamed estimates
// plus the closed-form disconnected and degree-derived entries.
std::array<double, kGabeDimension> gabe_subgraph_vector(
    const GabeRawCounts& raw, const GabeExactCounts& exact);

// Subgraph counts -> induced counts via the overlap matrix inverse, then
// each order block is normalized by C(|V|, k). Induced estimates may be
// negative; they are kept as-is.
GabeDescriptor assemble_gabe(const GabeRawCounts& raw,
                             const GabeExactCounts& exact);

}  // namespace streamdesc
