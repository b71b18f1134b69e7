#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "streamdesc/ensemble.hpp"
#include "streamdesc/eval.hpp"

namespace streamdesc {

enum class DescriptorKind : std::uint8_t {
  kGabe,
  kMaeve,
  kSantaHeatNone,
  kSantaHeatEmpty,
  kSantaHeatComplete,
  kSantaWaveNone,
  kSantaWaveEmpty,
  kSantaWaveComplete,
};

std::optional<DescriptorKind> parse_descriptor_kind(const std::string& name);
const char* descriptor_kind_name(DescriptorKind kind);
std::size_t descriptor_dimension(DescriptorKind kind);
bool is_spectral(DescriptorKind kind);
SantaVariant spectral_variant(DescriptorKind kind);

// Canberra for the count-based descriptors, Euclidean for the spectral one.
DistanceKind default_distance(DescriptorKind kind);

// Edge-sample budget, either an absolute edge count or a fraction of each
// graph's edge count (resolved per graph as ceil(f * |E|), at least 1).
struct BudgetSpec {
  bool fractional{false};
  double fraction{0};
  std::uint64_t absolute{0};

  static BudgetSpec parse(const std::string& text);
  std::uint64_t resolve(std::uint64_t num_edges) const;
  std::string describe() const;
};

// Full single-graph pipeline: ensemble estimation plus descriptor assembly.
std::vector<double> compute_descriptor(const PreparedStream& stream,
                                       DescriptorKind kind,
                                       std::uint64_t budget,
                                       std::uint32_t workers,
                                       std::uint64_t base_seed);

}  // namespace streamdesc
