#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tconn/graph.hpp"
#include "tconn/sink.hpp"

namespace tconn {

using BigInt = boost::multiprecision::cpp_int;

/// Largest leaf count of a rooted tree in which the child counts along
/// every root-to-leaf path sum to at most t. Equals the largest product of
/// positive integers summing to at most t. Throws InputError for t < 0.
BigInt max_leaves(int t);

/// |N[{v1..v_{q-1}}]| - 1. A single vertex gives -1.
/// Throws InputError unless seq is a path of distinct vertices in g.
int branch_depth(const Graph& g, const std::vector<Vertex>& seq);

struct PathEnumeration {
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;  ///< backtracking nodes visited
  bool stopped = false;     ///< the sink asked to stop
};

/**
 * Enumerate the induced paths (v1, ..., vq) with vq in N(R), no earlier
 * vertex in N[R], and branch depth at most `t_limit` (unbounded when empty).
 * Paths are produced in lexicographic order of vertex labels, each once.
 *
 * Requires R non-empty, v1 not in R and R disjoint from N[v1]; violations
 * throw InputError.
 */
PathEnumeration enumerate_induced_paths(const Graph& g, Vertex v1, const VertexSet& R,
                                        std::optional<int> t_limit, const PathSink& sink);

/// "id id ... bd=<depth>" in external ids.
std::string format_path(const Graph& g, const InducedPath& path);

}  // namespace tconn
