#include "streamdesc/gabe.hpp"

namespace streamdesc {

GabeAccumulator::GabeAccumulator(VertexId num_vertices)
    : degree_(num_vertices, 0) {}

void GabeAccumulator::on_arrival(const ArrivalCounts& counts, Edge e,
                                 std::uint64_t t, std::uint64_t budget) {
  ++num_edges_;
  ++degree_[e.u];
  ++degree_[e.v];

  if (!counts.triangle_thirds.empty()) {
    raw_.triangle += static_cast<double>(counts.triangle_thirds.size()) /
                     detection_probability(3, t, budget);
  }
  auto add = [t, budget](double& into, const std::vector<FourSetEvent>& events,
                         std::uint32_t m) {
    if (events.empty()) return;
    std::uint64_t n = 0;
    for (const FourSetEvent& ev : events) n += ev.count;
    into += static_cast<double>(n) / detection_probability(m, t, budget);
  };
  add(raw_.path4, counts.paths4, kPath4Edges);
  add(raw_.paw, counts.paws, kPawEdges);
  add(raw_.cycle4, counts.cycles4, kCycle4Edges);
  add(raw_.diamond, counts.diamonds, kDiamondEdges);
  add(raw_.k4, counts.k4s, kComplete4Edges);
}

GabeExactCounts GabeAccumulator::exact() const {
  GabeExactCounts out;
  out.num_vertices = degree_.size();
  out.num_edges = num_edges_;
  for (std::int64_t d : degree_) {
    out.wedge += binomial(static_cast<double>(d), 2);
    out.claw += binomial(static_cast<double>(d), 3);
  }
  return out;
}

double binomial(double n, std::uint32_t k) {
  if (n < k) return 0.0;
  double result = 1.0;
  // Dividing by i + 1 right after multiplying by n - i keeps every
  // intermediate an integer (it is C(n, i+1)), so integral inputs stay exact.
  for (std::uint32_t i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
  }
  return result;
}

std::array<double, kGabeDimension> gabe_subgraph_vector(
    const GabeRawCounts& raw, const GabeExactCounts& exact) {
  const GraphletCatalog& catalog = GraphletCatalog::get();
  const double V = static_cast<double>(exact.num_vertices);
  const double E = static_cast<double>(exact.num_edges);

  std::array<double, kGabeDimension> h{};
  auto set = [&](GraphletClass c, double value) {
    h[catalog.index_of(c)] = value;
  };
  set(GraphletClass::kEmpty2, binomial(V, 2));
  set(GraphletClass::kSingleEdge, E);
  set(GraphletClass::kEmpty3, binomial(V, 3));
  set(GraphletClass::kEdgePlusIsolated, E * (V - 2));
  set(GraphletClass::kWedge, exact.wedge);
  set(GraphletClass::kTriangle, raw.triangle);
  set(GraphletClass::kEmpty4, binomial(V, 4));
  set(GraphletClass::kEdgePlusTwoIsolated, E * binomial(V - 2, 2));
  set(GraphletClass::kTwoEdgeMatching, binomial(E, 2) - exact.wedge);
  set(GraphletClass::kWedgePlusIsolated, exact.wedge * (V - 3));
  set(GraphletClass::kTrianglePlusIsolated, raw.triangle * (V - 3));
  set(GraphletClass::kPath4, raw.path4);
  set(GraphletClass::kStar4, exact.claw);
  set(GraphletClass::kPaw, raw.paw);
  set(GraphletClass::kCycle4, raw.cycle4);
  set(GraphletClass::kDiamond, raw.diamond);
  set(GraphletClass::kComplete4, raw.k4);
  return h;
}

GabeDescriptor assemble_gabe(const GabeRawCounts& raw,
                             const GabeExactCounts& exact) {
  const GraphletCatalog& catalog = GraphletCatalog::get();
  GabeDescriptor out;
  out.degenerate = exact.num_vertices < 4;

  const auto h = gabe_subgraph_vector(raw, exact);
  const auto induced = OverlapMatrix::get().apply_inverse(h);

  for (std::uint32_t order = 2; order <= 4; ++order) {
    auto [begin, end] = catalog.order_block(order);
    double denom = binomial(static_cast<double>(exact.num_vertices), order);
    for (std::size_t i = begin; i < end; ++i) {
      out.values[i] = denom > 0 ? induced[i] / denom : 0.0;
    }
  }
  return out;
}

}  // namespace streamdesc
