#include "streamdesc/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace streamdesc {

namespace {

struct KindInfo {
  const char* name;
  DescriptorKind kind;
};

constexpr KindInfo kKinds[] = {
    {"gabe", DescriptorKind::kGabe},
    {"maeve", DescriptorKind::kMaeve},
    {"santa-hn", DescriptorKind::kSantaHeatNone},
    {"santa-he", DescriptorKind::kSantaHeatEmpty},
    {"santa-hc", DescriptorKind::kSantaHeatComplete},
    {"santa-wn", DescriptorKind::kSantaWaveNone},
    {"santa-we", DescriptorKind::kSantaWaveEmpty},
    {"santa-wc", DescriptorKind::kSantaWaveComplete},
};

}  // namespace

std::optional<DescriptorKind> parse_descriptor_kind(const std::string& name) {
  for (const KindInfo& info : kKinds) {
    if (name == info.name) return info.kind;
  }
  return std::nullopt;
}

const char* descriptor_kind_name(DescriptorKind kind) {
  for (const KindInfo& info : kKinds) {
    if (info.kind == kind) return info.name;
  }
  return "?";
}

std::size_t descriptor_dimension(DescriptorKind kind) {
  switch (kind) {
    case DescriptorKind::kGabe:
      return kGabeDimension;
    case DescriptorKind::kMaeve:
      return kMaeveDimension;
    default:
      return kSantaDimension;
  }
}

bool is_spectral(DescriptorKind kind) {
  return kind != DescriptorKind::kGabe && kind != DescriptorKind::kMaeve;
}

SantaVariant spectral_variant(DescriptorKind kind) {
  switch (kind) {
    case DescriptorKind::kSantaHeatNone:
      return {SpectralKernel::kHeat, SpectralNorm::kNone};
    case DescriptorKind::kSantaHeatEmpty:
      return {SpectralKernel::kHeat, SpectralNorm::kEmpty};
    case DescriptorKind::kSantaHeatComplete:
      return {SpectralKernel::kHeat, SpectralNorm::kComplete};
    case DescriptorKind::kSantaWaveNone:
      return {SpectralKernel::kWave, SpectralNorm::kNone};
    case DescriptorKind::kSantaWaveEmpty:
      return {SpectralKernel::kWave, SpectralNorm::kEmpty};
    case DescriptorKind::kSantaWaveComplete:
      return {SpectralKernel::kWave, SpectralNorm::kComplete};
    default:
      throw ConfigError("not a spectral descriptor");
  }
}

DistanceKind default_distance(DescriptorKind kind) {
  return is_spectral(kind) ? DistanceKind::kEuclidean : DistanceKind::kCanberra;
}

BudgetSpec BudgetSpec::parse(const std::string& text) {
  std::string body = text;
  if (body.rfind("b=", 0) == 0) body = body.substr(2);
  if (body.empty()) throw ConfigError("empty budget");

  BudgetSpec spec;
  if (body.find('.') != std::string::npos) {
    char* end = nullptr;
    double f = std::strtod(body.c_str(), &end);
    if (end != body.c_str() + body.size() || !(f > 0.0) || f > 1.0) {
      throw ConfigError("fractional budget must be in (0, 1]: '" + text + "'");
    }
    spec.fractional = true;
    spec.fraction = f;
    return spec;
  }
  char* end = nullptr;
  unsigned long long v = std::strtoull(body.c_str(), &end, 10);
  if (end != body.c_str() + body.size() || body[0] == '-' || v == 0) {
    throw ConfigError("budget must be a positive edge count or a fraction: '" +
                      text + "'");
  }
  spec.absolute = v;
  return spec;
}

std::uint64_t BudgetSpec::resolve(std::uint64_t num_edges) const {
  if (!fractional) return absolute;
  double raw = std::ceil(fraction * static_cast<double>(num_edges));
  std::uint64_t b = static_cast<std::uint64_t>(raw);
  return b > 0 ? b : 1;
}

std::string BudgetSpec::describe() const {
  if (fractional) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", fraction);
    return buf;
  }
  return std::to_string(absolute);
}

std::vector<double> compute_descriptor(const PreparedStream& stream,
                                       DescriptorKind kind,
                                       std::uint64_t budget,
                                       std::uint32_t workers,
                                       std::uint64_t base_seed) {
  EnsembleConfig config{workers, base_seed, budget};
  switch (kind) {
    case DescriptorKind::kGabe: {
      GabeEstimate est = ensemble_gabe(stream, config);
      GabeDescriptor d = assemble_gabe(est.raw, est.exact);
      return {d.values.begin(), d.values.end()};
    }
    case DescriptorKind::kMaeve: {
      MaeveEstimate est = ensemble_maeve(stream, config);
      MaeveDescriptor d =
          assemble_maeve(est.degrees, est.triangles, est.path_ends);
      return {d.values.begin(), d.values.end()};
    }
    default: {
      TraceEstimates traces = ensemble_santa(stream, config);
      SantaDescriptor d =
          assemble_santa(traces, spectral_variant(kind), stream.num_vertices);
      return {d.values.begin(), d.values.end()};
    }
  }
}

}  // namespace streamdesc
