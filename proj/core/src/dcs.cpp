#include "tconn/dcs.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "tconn/connecting.hpp"
#include "tconn/errors.hpp"
#include "tconn/sink.hpp"

namespace tconn {

DcsStrategy select_strategy(int n, int z1, int z2) {
  if (z1 > z2) std::swap(z1, z2);
  if (z1 < 1 || z1 + z2 > n) throw InputError("select_strategy: need 1 <= |Z1| and |Z1| + |Z2| <= n");
  const double alpha = static_cast<double>(z1) / n;
  return alpha <= kDcsAlphaThreshold ? DcsStrategy::EnumerateMinimal : DcsStrategy::SubsetLoop;
}

std::optional<VertexSet> stage2_check(const Graph& g, const VertexSet& z2, const VertexSet& a) {
  g.check_set(z2, "Z2");
  g.check_set(a, "candidate");
  const Vertex anchor = z2.first();
  if (anchor == -1 || a.contains(anchor)) return std::nullopt;
  VertexSet block = component_of(g, g.all_vertices() - a, anchor);
  if (!z2.is_subset_of(block)) return std::nullopt;
  return block;
}

namespace {

void check_instance(const DcsInstance& inst) {
  const Graph& g = inst.graph;
  g.check_set(inst.z1, "Z1");
  g.check_set(inst.z2, "Z2");
  if (inst.z1.empty() || inst.z2.empty()) throw InputError("Z1 and Z2 must be non-empty");
  if (inst.z1.intersects(inst.z2)) throw InputError("Z1 and Z2 overlap");
  if (!is_connected(g, g.all_vertices())) throw InputError("input graph is not connected");
}

}  // namespace

DcsResult solve_2dcs(const DcsInstance& inst, const DcsOptions& options) {
  check_instance(inst);
  const Graph& g = inst.graph;
  DcsResult out;
  out.swapped = inst.z1.size() > inst.z2.size();
  const VertexSet& z1 = out.swapped ? inst.z2 : inst.z1;
  const VertexSet& z2 = out.swapped ? inst.z1 : inst.z2;
  out.strategy = options.force.value_or(select_strategy(g.size(), z1.size(), z2.size()));

  // Returns Flow::Stop once the search may end.
  auto consider = [&](const VertexSet& a) {
    ++out.candidates;
    auto a2 = stage2_check(g, z2, a);
    if (!a2) return Flow::Continue;
    ++out.witnesses;
    if (!out.witness) {
      out.witness = out.swapped ? DcsWitness{*a2, a} : DcsWitness{a, *a2};
    }
    return options.count_all ? Flow::Continue : Flow::Stop;
  };

  if (out.strategy == DcsStrategy::EnumerateMinimal) {
    const VertexSet side = g.all_vertices() - z2;
    const Graph h = induced_subgraph(g, side);
    enumerate_minimal_connecting(h, restrict_to_induced(side, z1), [&](const VertexSet& s) {
      const VertexSet a = lift_from_induced(side, s);
      assert(is_connected(g, a));
      return consider(a);
    });
    return out;
  }

  const auto free = (g.all_vertices() - z1 - z2).to_vector();
  if (free.size() > 62) throw InputError("subset loop supports at most 62 non-terminals");
  const std::uint64_t limit = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    VertexSet a = z1;
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((mask >> i) & 1U) a.insert(free[i]);
    if (!is_connected(g, a)) continue;
    if (consider(a) == Flow::Stop) break;
  }
  return out;
}

bool verify_witness(const DcsInstance& inst, const DcsWitness& w) {
  const Graph& g = inst.graph;
  if (w.a1.universe() != g.size() || w.a2.universe() != g.size()) return false;
  return inst.z1.is_subset_of(w.a1) && inst.z2.is_subset_of(w.a2) && !w.a1.intersects(w.a2) &&
         !w.a1.empty() && !w.a2.empty() && is_connected(g, w.a1) && is_connected(g, w.a2);
}

namespace {

double xlogx(double x) { return x <= 0 ? 0.0 : x * std::log(x); }

}  // namespace

double enumeration_base_ln(double alpha) {
  const double beta = 1 - 2 * alpha;
  if (beta - alpha < 0) return -std::numeric_limits<double>::infinity();
  return xlogx(beta) - xlogx(alpha) - xlogx(beta - alpha) + beta / 3 * std::log(3.0);
}

double subset_loop_base_ln(double alpha) { return (1 - 2 * alpha) * std::log(2.0); }

std::vector<CurvePoint> runtime_bound_curve(double alpha_max, double step) {
  if (!(step > 0 && step < alpha_max && alpha_max <= 0.5))
    throw InputError("runtime_bound_curve: need 0 < step < alpha_max <= 0.5");
  std::vector<CurvePoint> out;
  const auto points = static_cast<long>(std::floor(alpha_max / step + 1e-9));
  out.reserve(static_cast<std::size_t>(points));
  for (long k = 1; k <= points; ++k) {
    const double alpha = static_cast<double>(k) * step;
    const double ln_base = enumeration_base_ln(alpha);
    out.push_back({alpha, ln_base, std::exp(ln_base)});
  }
  return out;
}

}  // namespace tconn
