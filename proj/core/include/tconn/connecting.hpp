#pragma once

/**
 * Enumeration of minimal T-connecting sets.
 *
 * A superset S of the terminal set T is T-connecting when G[S] is
 * connected, and minimal when no strict subset containing T is. The
 * branching enumerator grows a connector C from the component of the
 * lowest-label terminal by induced paths towards the remaining terminals,
 * excluding lower-labelled neighbors of the grown component in later
 * branches. Its raw output is a family containing every minimal set; the
 * public enumerator filters and deduplicates it.
 */

#include <cstdint>
#include <optional>

#include "tconn/graph.hpp"
#include "tconn/sink.hpp"

namespace tconn {

/// Recursion node of the branching enumerator.
struct ConnectorState {
  VertexSet connector;  ///< C: non-terminals chosen so far
  VertexSet excluded;   ///< X: vertices barred from this subtree
  int depth = 0;        ///< number of paths added
};

/// Derived data of a recursion node that is not yet connected.
struct ConnectorView {
  VertexSet component;            ///< C_u: block of G[T ∪ C] containing the root terminal
  VertexSet remaining_terminals;  ///< T \ C_u
  Contracted contracted;          ///< G with C_u merged into the root terminal
};

ConnectorView make_connector_view(const Graph& g, const VertexSet& terminals, Vertex root, const ConnectorState& state);

/// How the branching enumerator searches paths out of the grown component.
enum class PathMode {
  Rebuild,      ///< build the contracted graph G' explicitly at every node
  Incremental,  ///< search G directly with the component acting as the root
};

enum class ConnectingStrategy { Auto, Branching, BruteForce };

struct ConnectingOptions {
  ConnectingStrategy strategy = ConnectingStrategy::Auto;
  PathMode path_mode = PathMode::Rebuild;
};

struct ConnectingResult {
  std::uint64_t emitted = 0;  ///< sets passed to the sink
  std::uint64_t raw = 0;      ///< candidates before filtering (branching outputs or brute-force subsets)
  std::uint64_t nodes = 0;    ///< recursion nodes (branching) or subsets tested (brute force)
  bool brute_force = false;
  bool stopped = false;
};

/// Terminal set made independent by contracting terminal-terminal edges.
struct ReducedInstance {
  Graph graph;
  VertexSet terminals;
  ContractionMap map;  ///< reduced vertex -> original vertices
};

ReducedInstance contract_terminal_edges(const Graph& g, const VertexSet& terminals);

/// Raw branching enumeration rooted at the lowest-label terminal. Needs
/// |T| >= 2; returns without output when T spans several components of g.
/// The family may repeat sets and contain non-minimal ones.
ConnectingResult enumerate_connecting_supersets(const Graph& g, const VertexSet& terminals, const SetSink& sink,
                                                PathMode mode = PathMode::Rebuild);

bool is_minimal_connecting(const Graph& g, const VertexSet& terminals, const VertexSet& s);

/// Every minimal T-connecting set exactly once, in the ids of g. Empty T
/// produces nothing, a single terminal produces {T}.
ConnectingResult enumerate_minimal_connecting(const Graph& g, const VertexSet& terminals, const SetSink& sink,
                                              const ConnectingOptions& options = {});

/// Tests every T ∪ A for A ⊆ V \ T. Empty T produces nothing.
ConnectingResult brute_force_connecting(const Graph& g, const VertexSet& terminals, const SetSink& sink);

struct CountBound {
  double ln_value = 0;
  std::optional<std::uint64_t> exact;  ///< set when the bound is an integer that fits
};

/// C(n - t, t - 2) * 3^((n - t) / 3), the largest possible number of
/// minimal T-connecting sets for |T| = t <= n / 3.
CountBound minimal_set_count_bound(int n, int t);

/// ln of C(non_terminals, t - 2) * 3^(r / 3): the cap on raw branching
/// outputs S with |N[S] \ T| <= r.
double raw_output_bound_ln(int non_terminals, int t, int r);

}  // namespace tconn
