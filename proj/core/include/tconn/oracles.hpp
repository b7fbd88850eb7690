#pragma once

/**
 * Brute-force reference implementations for tests and `tconn verify`.
 *
 * They share nothing with the enumerators beyond the Graph type: adjacency
 * is copied into plain bitmasks and every property is checked by its
 * definition. Each refuses instances above its size cap with InputError.
 */

#include <set>
#include <vector>

#include "tconn/graph.hpp"
#include "tconn/induced_paths.hpp"

namespace tconn::oracle {

inline constexpr int kConnectingCap = 20;
inline constexpr int kPathCap = 12;
inline constexpr int kDcsCap = 16;

/// All minimal T-connecting sets, found by marking every T-connecting
/// superset and keeping those with no T-connecting strict subset. Empty T
/// yields the empty family.
std::set<VertexSet> minimal_connecting(const Graph& g, const VertexSet& terminals, int cap = kConnectingCap);

/// Literal minimality: S contains T, G[S] is connected, and no T ⊆ S' ⊊ S
/// induces a connected subgraph. Loops over all subsets of S \ T.
bool literal_is_minimal_connecting(const Graph& g, const VertexSet& terminals, const VertexSet& s);

/// All induced paths from v1 ending in N(R) with no earlier vertex in N[R],
/// found by depth-first search over simple paths.
std::set<std::vector<Vertex>> induced_paths(const Graph& g, Vertex v1, const VertexSet& R);

/// Tries every assignment of the non-terminals to A1, A2 or neither.
bool two_dcs(const Graph& g, const VertexSet& z1, const VertexSet& z2);

/// Dynamic program f(0) = 1, f(t) = max(1, max_c c * f(t - c)).
BigInt max_leaves(int t);

}  // namespace tconn::oracle
