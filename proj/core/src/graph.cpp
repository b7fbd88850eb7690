#include "tconn/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "tconn/errors.hpp"

namespace tconn {

Graph::Graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
  ids_.resize(static_cast<std::size_t>(n));
  std::iota(ids_.begin(), ids_.end(), 1);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge endpoint out of range: " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u + 1));
    if (adj_[static_cast<std::size_t>(u)].contains(v))
      throw InputError("duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
    ++edges_;
  }
}

Graph Graph::from_rows(std::vector<VertexSet> rows, std::vector<int> external_ids) {
  const int n = static_cast<int>(rows.size());
  if (external_ids.size() != rows.size()) throw InputError("external id count does not match vertex count");
  Graph g;
  int degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto& row = rows[static_cast<std::size_t>(v)];
    if (row.universe() != n) throw InputError("adjacency row has wrong universe");
    if (row.contains(v)) throw InputError("self-loop at vertex " + std::to_string(external_ids[static_cast<std::size_t>(v)]));
    for (Vertex w : row)
      if (!rows[static_cast<std::size_t>(w)].contains(v)) throw InputError("asymmetric adjacency");
    degree_sum += row.size();
  }
  g.adj_ = std::move(rows);
  g.ids_ = std::move(external_ids);
  g.edges_ = degree_sum / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v = neighbors(u).next(u); v != -1; v = neighbors(u).next(v)) out.emplace_back(u, v);
  return out;
}

void Graph::check_set(const VertexSet& s, const char* what) const {
  if (s.universe() != size())
    throw InputError(std::string(what) + " is over " + std::to_string(s.universe()) + " vertices, graph has " +
                     std::to_string(size()));
}

void Graph::check_vertex(Vertex v, const char* what) const {
  if (v < 0 || v >= size()) throw InputError(std::string(what) + " out of range: " + std::to_string(v));
}

ContractionMap ContractionMap::identity(int n) {
  std::vector<std::vector<Vertex>> blocks(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) blocks[static_cast<std::size_t>(v)] = {v};
  return {n, std::move(blocks)};
}

VertexSet ContractionMap::expand(const VertexSet& s) const {
  VertexSet out(source_size_);
  for (Vertex v : s)
    for (Vertex w : block(v)) out.insert(w);
  return out;
}

ContractionMap ContractionMap::then(const ContractionMap& next) const {
  std::vector<std::vector<Vertex>> blocks(static_cast<std::size_t>(next.result_size()));
  for (Vertex v = 0; v < next.result_size(); ++v) {
    auto& b = blocks[static_cast<std::size_t>(v)];
    for (Vertex mid : next.block(v)) {
      const auto& inner = block(mid);
      b.insert(b.end(), inner.begin(), inner.end());
    }
    std::sort(b.begin(), b.end());
  }
  return {source_size_, std::move(blocks)};
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  VertexSet out = s;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) { return closed_neighborhood(g, s) - s; }

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  const auto members = s.to_vector();
  const int k = static_cast<int>(members.size());
  std::vector<int> index(static_cast<std::size_t>(g.size()), -1);
  for (int i = 0; i < k; ++i) index[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])] = i;

  std::vector<VertexSet> rows(static_cast<std::size_t>(k), VertexSet(k));
  std::vector<int> ids(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const Vertex v = members[static_cast<std::size_t>(i)];
    ids[static_cast<std::size_t>(i)] = g.external_id(v);
    for (Vertex w : g.neighbors(v) & s) rows[static_cast<std::size_t>(i)].insert(index[static_cast<std::size_t>(w)]);
  }
  return Graph::from_rows(std::move(rows), std::move(ids));
}

VertexSet lift_from_induced(const VertexSet& s, const VertexSet& sub) {
  VertexSet out(s.universe());
  int i = 0;
  for (Vertex v : s) {
    if (sub.contains(i)) out.insert(v);
    ++i;
  }
  return out;
}

VertexSet restrict_to_induced(const VertexSet& s, const VertexSet& members) {
  VertexSet out(s.size());
  int i = 0;
  for (Vertex v : s) {
    if (members.contains(v)) out.insert(i);
    ++i;
  }
  return out;
}

VertexSet component_of(const Graph& g, const VertexSet& s, Vertex v) {
  VertexSet seen(g.size());
  seen.insert(v);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(g.size());
    for (Vertex x : frontier) next |= g.neighbors(x);
    next &= s;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

bool is_connected(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  const Vertex first = s.first();
  if (first == -1) return true;
  return component_of(g, s, first) == s;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  std::vector<VertexSet> out;
  VertexSet rest = s;
  // Seeds are taken in ascending order, so blocks come out sorted by minimum.
  for (Vertex v = rest.first(); v != -1; v = rest.first()) {
    out.push_back(component_of(g, rest, v));
    rest -= out.back();
  }
  return out;
}

namespace {

/// Drop the vertices of `merged` except `rep`, giving `rep` the union of
/// their outside neighbors.
Contracted merge_into(const Graph& g, const VertexSet& merged, Vertex rep) {
  const int n = g.size();
  VertexSet keep = g.all_vertices() - merged;
  keep.insert(rep);

  VertexSet rep_nbrs(n);
  for (Vertex x : merged) rep_nbrs |= g.neighbors(x);
  rep_nbrs -= merged;

  const int k = keep.size();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> blocks;
  blocks.reserve(static_cast<std::size_t>(k));
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(k));
  for (Vertex v : keep) {
    index[static_cast<std::size_t>(v)] = static_cast<int>(blocks.size());
    ids.push_back(g.external_id(v));
    blocks.push_back(v == rep ? merged.to_vector() : std::vector<Vertex>{v});
  }

  std::vector<VertexSet> rows(static_cast<std::size_t>(k), VertexSet(k));
  for (Vertex v : keep) {
    const auto i = static_cast<std::size_t>(index[static_cast<std::size_t>(v)]);
    const VertexSet& nb = v == rep ? rep_nbrs : g.neighbors(v);
    for (Vertex w : nb) {
      if (merged.contains(w)) w = rep;
      if (w != v) rows[i].insert(index[static_cast<std::size_t>(w)]);
    }
  }
  return {Graph::from_rows(std::move(rows), std::move(ids)), ContractionMap(n, std::move(blocks))};
}

}  // namespace

Contracted contract_edge(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v || !g.adjacent(u, v))
    throw InputError("cannot contract non-edge " + std::to_string(g.external_id(u)) + " " +
                     std::to_string(g.external_id(v)));
  return merge_into(g, VertexSet(g.size(), {u, v}), v);
}

Contracted contract_set(const Graph& g, const VertexSet& s, Vertex rep) {
  g.check_set(s);
  g.check_vertex(rep, "representative");
  if (!s.contains(rep)) throw InputError("representative is not in the contracted set");
  if (!is_connected(g, s)) throw InputError("contracted set does not induce a connected subgraph");
  return merge_into(g, s, rep);
}

VertexSet translate_by_ids(const Graph& from, const VertexSet& s, const Graph& to) {
  std::unordered_map<int, Vertex> where;
  for (Vertex v = 0; v < to.size(); ++v) where.emplace(to.external_id(v), v);
  VertexSet out(to.size());
  for (Vertex v : s)
    if (auto it = where.find(from.external_id(v)); it != where.end()) out.insert(it->second);
  return out;
}

std::vector<int> to_external(const Graph& g, const VertexSet& s) {
  std::vector<int> out;
  for (Vertex v : s) out.push_back(g.external_id(v));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet from_external(const Graph& g, const std::vector<int>& ids) {
  std::unordered_map<int, Vertex> where;
  for (Vertex v = 0; v < g.size(); ++v) where.emplace(g.external_id(v), v);
  VertexSet out(g.size());
  for (int id : ids) {
    auto it = where.find(id);
    if (it == where.end()) throw InputError("unknown vertex id " + std::to_string(id));
    out.insert(it->second);
  }
  return out;
}

std::string format_set(const Graph& g, const VertexSet& s) {
  std::ostringstream os;
  bool first = true;
  for (int id : to_external(g, s)) {
    if (!first) os << ' ';
    os << id;
    first = false;
  }
  return os.str();
}

}  // namespace tconn
