#pragma once

/**
 * Immutable simple undirected graph over dense vertex ids 0..n-1.
 *
 * Every vertex carries an external id (1-based, as read from input) that
 * survives induced subgraphs and contractions, so results computed on a
 * derived graph can always be reported in the ids of the original input.
 * Derived graphs keep their surviving vertices in parent order, which makes
 * the dense index itself the vertex label: label(v) = v + 1.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tconn/vertex_set.hpp"

namespace tconn {

using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  Graph() = default;

  /// Graph on n vertices with external ids 1..n. Throws InputError on
  /// self-loops, duplicate edges and out-of-range endpoints.
  Graph(int n, const std::vector<Edge>& edges);

  /// Graph from symmetric adjacency rows; `external_ids` must have one entry
  /// per row. Throws InputError if rows are asymmetric or contain loops.
  static Graph from_rows(std::vector<VertexSet> rows, std::vector<int> external_ids);

  int size() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edges_; }

  const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
  int degree(Vertex v) const { return neighbors(v).size(); }

  /// Position of v in the vertex order, 1..n.
  int label(Vertex v) const { return v + 1; }

  int external_id(Vertex v) const { return ids_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& external_ids() const { return ids_; }

  VertexSet empty_set() const { return VertexSet(size()); }
  VertexSet all_vertices() const { return VertexSet::full(size()); }

  std::vector<Edge> edges() const;

  /// Throws InputError unless s is a set over this graph's vertex range.
  void check_set(const VertexSet& s, const char* what = "vertex set") const;
  void check_vertex(Vertex v, const char* what = "vertex") const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_ && a.ids_ == b.ids_;
  }

 private:
  std::vector<VertexSet> adj_;
  std::vector<int> ids_;
  int edges_ = 0;
};

/// Result vertex -> the vertices of the source graph merged into it.
/// Blocks partition the source vertex set.
class ContractionMap {
 public:
  ContractionMap() = default;
  ContractionMap(int source_size, std::vector<std::vector<Vertex>> blocks)
      : source_size_(source_size), blocks_(std::move(blocks)) {}

  static ContractionMap identity(int n);

  int source_size() const { return source_size_; }
  int result_size() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Vertex>& block(Vertex v) const { return blocks_[static_cast<std::size_t>(v)]; }

  /// Union of the blocks of every member of `s` (a set over the result graph).
  VertexSet expand(const VertexSet& s) const;

  /// The map for applying `this` first and `next` afterwards.
  ContractionMap then(const ContractionMap& next) const;

 private:
  int source_size_ = 0;
  std::vector<std::vector<Vertex>> blocks_;
};

struct Contracted {
  Graph graph;
  ContractionMap map;
};

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

/// G[s], re-indexed densely in the order of s. The k-th vertex of the result
/// is the k-th smallest member of s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Translate a set over induced_subgraph(g, s) back to g.
VertexSet lift_from_induced(const VertexSet& s, const VertexSet& sub);
/// Translate a subset of s (over g) to the vertex range of induced_subgraph(g, s).
VertexSet restrict_to_induced(const VertexSet& s, const VertexSet& members);

/// Sets with at most one vertex are connected.
bool is_connected(const Graph& g, const VertexSet& s);

/// Maximal connected blocks of G[s], ordered by their smallest label.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);

/// Block of G[s] containing `v` (v must be in s).
VertexSet component_of(const Graph& g, const VertexSet& s, Vertex v);

/// Contract edge uv into v. Throws InputError if uv is not an edge.
Contracted contract_edge(const Graph& g, Vertex u, Vertex v);

/// Merge all of s into `rep`. Throws InputError if rep is not in s or G[s]
/// is disconnected.
Contracted contract_set(const Graph& g, const VertexSet& s, Vertex rep);

/// Map a set from `from` to `to` using external ids; members absent from
/// `to` are dropped.
VertexSet translate_by_ids(const Graph& from, const VertexSet& s, const Graph& to);

/// External ids of the members of s, ascending by vertex order.
std::vector<int> to_external(const Graph& g, const VertexSet& s);

/// Vertex set from external ids. Throws InputError for unknown ids.
VertexSet from_external(const Graph& g, const std::vector<int>& ids);

/// Space-separated ascending external ids.
std::string format_set(const Graph& g, const VertexSet& s);

}  // namespace tconn
