#pragma once

/**
 * 2-Disjoint Connected Subgraphs: given a connected graph and disjoint
 * terminal sets Z1, Z2, find disjoint A1 ⊇ Z1 and A2 ⊇ Z2 that both induce
 * connected subgraphs.
 *
 * Candidates for A1 come either from the minimal Z1-connecting sets of
 * G - Z2 (small Z1) or from every Z1 ∪ B with B ⊆ V \ (Z1 ∪ Z2). Each
 * candidate is accepted when all of Z2 lies in one component of G - A1.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "tconn/graph.hpp"

namespace tconn {

struct DcsInstance {
  Graph graph;
  VertexSet z1;
  VertexSet z2;
};

struct DcsWitness {
  VertexSet a1;
  VertexSet a2;
};

enum class DcsStrategy { EnumerateMinimal, SubsetLoop };

/// Largest |Z1|/n for which minimal connecting set enumeration is used.
inline constexpr double kDcsAlphaThreshold = 0.0839;

/// Picks the candidate generator from alpha = min(z1, z2) / n.
DcsStrategy select_strategy(int n, int z1, int z2);

/// The component of G - A holding all of Z2, if there is one.
std::optional<VertexSet> stage2_check(const Graph& g, const VertexSet& z2, const VertexSet& a);

struct DcsOptions {
  std::optional<DcsStrategy> force;
  bool count_all = false;  ///< keep going after the first witness
};

struct DcsResult {
  std::optional<DcsWitness> witness;  ///< first witness, in the caller's Z1/Z2 orientation
  DcsStrategy strategy = DcsStrategy::EnumerateMinimal;
  bool swapped = false;            ///< Z1 and Z2 were exchanged internally
  std::uint64_t candidates = 0;    ///< A1 candidates examined
  std::uint64_t witnesses = 0;     ///< candidates that passed stage 2
};

/// Throws InputError for a disconnected graph, empty or overlapping
/// terminal sets.
DcsResult solve_2dcs(const DcsInstance& inst, const DcsOptions& options = {});

bool verify_witness(const DcsInstance& inst, const DcsWitness& w);

struct CurvePoint {
  double alpha = 0;
  double ln_base = 0;
  double base = 0;
};

/**
 * Per-vertex growth base of C((1-2a)n, an) * 3^((1-2a)n/3) for a on the
 * grid step, 2*step, ... up to alpha_max. Beyond a = 1/3 the binomial is
 * zero, reported as base 0.
 */
std::vector<CurvePoint> runtime_bound_curve(double alpha_max, double step);

/// ln of the per-vertex base of the enumeration regime at a single alpha.
double enumeration_base_ln(double alpha);

/// ln of 2^(1-2a), the subset-loop regime's per-vertex base.
double subset_loop_base_ln(double alpha);

}  // namespace tconn
