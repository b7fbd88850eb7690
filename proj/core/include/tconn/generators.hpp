#pragma once

#include <cstdint>

#include "tconn/graph.hpp"

namespace tconn {

/**
 * Layered graph with the largest possible number of induced paths for its
 * branch depth: a source v, columns K_1..K_i of independent vertices joined
 * completely to their neighbours, and a path R attached to the last column.
 *
 *   Exact3i  every column has 3 vertices, depth 3i, 3^i paths
 *   Plus1    the first column has 4 vertices, depth 3i+1, 4*3^(i-1) paths
 *   Plus2    an extra 2-vertex column next to R, depth 3i+2, 2*3^i paths
 */
enum class Figure1Variant { Exact3i, Plus1, Plus2 };

struct Figure1Spec {
  int columns = 1;
  int r_size = 1;
  Figure1Variant variant = Figure1Variant::Exact3i;
};

struct Figure1Instance {
  Graph graph;
  Vertex source = 0;
  VertexSet targets;  ///< R

  /// {v} ∪ R.
  VertexSet terminals() const {
    VertexSet t = targets;
    t.insert(source);
    return t;
  }
};

Figure1Instance gen_figure1(const Figure1Spec& spec);

/// G(n, p) with a 64-bit Mersenne twister; identical for identical inputs.
Graph gen_random(int n, double edge_prob, std::uint64_t seed);

enum class NamedGraph { Path, Cycle, Star, Complete };

/// Path, cycle, star K_{1,n-1} (center is vertex 0) or complete graph.
Graph gen_named(NamedGraph kind, int n);

}  // namespace tconn
