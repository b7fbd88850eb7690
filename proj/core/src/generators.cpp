#include "tconn/generators.hpp"

#include <random>
#include <vector>

#include "tconn/errors.hpp"

namespace tconn {

Figure1Instance gen_figure1(const Figure1Spec& spec) {
  if (spec.columns < 1) throw InputError("figure-1 family needs at least one column");
  if (spec.r_size < 1) throw InputError("figure-1 family needs |R| >= 1");

  std::vector<int> widths(static_cast<std::size_t>(spec.columns), 3);
  if (spec.variant == Figure1Variant::Plus1) widths.front() = 4;
  if (spec.variant == Figure1Variant::Plus2) widths.push_back(2);

  int n = 1;
  std::vector<std::vector<Vertex>> layers{{0}};
  for (int w : widths) {
    std::vector<Vertex> layer;
    for (int j = 0; j < w; ++j) layer.push_back(n++);
    layers.push_back(std::move(layer));
  }
  const Vertex r_first = n;
  n += spec.r_size;

  std::vector<Edge> edges;
  for (std::size_t l = 0; l + 1 < layers.size(); ++l)
    for (Vertex a : layers[l])
      for (Vertex b : layers[l + 1]) edges.emplace_back(a, b);
  for (Vertex a : layers.back()) edges.emplace_back(a, r_first);
  for (Vertex r = r_first; r + 1 < n; ++r) edges.emplace_back(r, r + 1);

  Figure1Instance out{Graph(n, edges), 0, VertexSet(n)};
  for (Vertex r = r_first; r < n; ++r) out.targets.insert(r);
  return out;
}

Graph gen_random(int n, double edge_prob, std::uint64_t seed) {
  if (n < 0) throw InputError("negative vertex count");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      // Top 53 bits as a uniform double in [0, 1); avoids library-specific distributions.
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < edge_prob) edges.emplace_back(u, v);
    }
  return Graph(n, edges);
}

Graph gen_named(NamedGraph kind, int n) {
  if (n < 1) throw InputError("named graphs need n >= 1");
  std::vector<Edge> edges;
  switch (kind) {
    case NamedGraph::Path:
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case NamedGraph::Cycle:
      if (n < 3) throw InputError("a cycle needs n >= 3");
      for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      break;
    case NamedGraph::Star:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case NamedGraph::Complete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
  }
  return Graph(n, edges);
}

}  // namespace tconn
