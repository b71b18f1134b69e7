#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "streamdesc/enumeration.hpp"

namespace streamdesc {

inline constexpr std::size_t kSantaDimension = 60;

enum class SpectralKernel : std::uint8_t { kHeat, kWave };
enum class SpectralNorm : std::uint8_t { kNone, kEmpty, kComplete };

struct SantaVariant {
  SpectralKernel kernel{SpectralKernel::kHeat};
  SpectralNorm norm{SpectralNorm::kNone};
};

// Exact degrees from a dedicated first pass; trace estimation replays the
// stream against them.
struct DegreeTable {
  std::vector<std::int64_t> degree;
  std::int64_t num_positive{0};
};

DegreeTable degree_pass(const PreparedStream& stream);

// Power traces of the normalized Laplacian: tr(I), tr(L), and estimates of
// tr(L^2), tr(L^3), tr(L^4).
struct TraceEstimates {
  double tr_identity{0};
  double tr_laplacian{0};
  double tau2{0};
  double tau3{0};
  double tau4{0};
};

// Second-pass estimator. Every vertex with positive degree contributes 1 to
// each tau (added in closed form at the end); each edge contributes its
// closed two-vertex walk weights exactly; wedge, triangle and 4-cycle walk
// weights are inverse-probability estimated with m = 2, 3, 4.
class TraceAccumulator : public ArrivalObserver {
 public:
  TraceAccumulator(const DegreeTable& degrees, VertexId num_vertices);

  unsigned needs() const override {
    return kNeedTriangles | kNeedWedges | kNeedFourCycles;
  }
  void on_arrival(const ArrivalCounts& counts, Edge e, std::uint64_t t,
                  std::uint64_t budget) override;

  TraceEstimates finish() const;

 private:
  double deg(VertexId v) const;

  const DegreeTable& degrees_;
  VertexId num_vertices_;
  double tau2_{0};
  double tau3_{0};
  double tau4_{0};
};

// Convenience wrapper: one drive of the stream with a TraceAccumulator.
TraceEstimates trace_estimates(const PreparedStream& stream,
                               const DegreeTable& degrees,
                               std::uint64_t budget, std::uint64_t seed);

// Four or five term Taylor expansion of the spectral sum at scale j:
//   heat: tr(I) - j tr(L) + j^2/2 tau2 - j^3/6 tau3 + j^4/24 tau4
//   wave: tr(I) - j^2/2 tau2 + j^4/24 tau4 (real part at beta = i)
double taylor_spectral_sum(const TraceEstimates& traces, double j,
                           SpectralKernel kernel);

// Normalization factor applied to the spectral sum; num_vertices must be
// positive for the empty and complete references.
double normalization_factor(SpectralNorm norm, SpectralKernel kernel,
                            std::uint64_t num_vertices, double j);

// 60 logarithmically spaced scales, 10^-3 through 10^0 inclusive.
const std::array<double, kSantaDimension>& santa_scales();

struct SantaDescriptor {
  std::array<double, kSantaDimension> values{};
  SantaVariant variant;
};

SantaDescriptor assemble_santa(const TraceEstimates& traces,
                               SantaVariant variant,
                               std::uint64_t num_vertices);

}  // namespace streamdesc
