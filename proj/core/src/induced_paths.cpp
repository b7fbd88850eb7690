#include "tconn/induced_paths.hpp"

#include <limits>
#include <sstream>

#include "tconn/detail/path_search.hpp"
#include "tconn/errors.hpp"

namespace tconn {

BigInt max_leaves(int t) {
  if (t < 0) throw InputError("max_leaves: negative argument " + std::to_string(t));
  if (t <= 1) return 1;
  const int i = t / 3;
  BigInt three_i = boost::multiprecision::pow(BigInt(3), i);
  switch (t % 3) {
    case 0:
      return three_i;
    case 1:
      return 4 * three_i / 3;
    default:
      return 2 * three_i;
  }
}

int branch_depth(const Graph& g, const std::vector<Vertex>& seq) {
  if (seq.empty()) throw InputError("branch_depth: empty sequence");
  VertexSet seen = g.empty_set();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    g.check_vertex(seq[i], "path vertex");
    if (seen.contains(seq[i])) throw InputError("branch_depth: repeated vertex");
    seen.insert(seq[i]);
    if (i > 0 && !g.adjacent(seq[i - 1], seq[i])) throw InputError("branch_depth: consecutive vertices not adjacent");
  }
  VertexSet prefix = g.empty_set();
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) prefix.insert(seq[i]);
  return closed_neighborhood(g, prefix).size() - 1;
}

PathEnumeration enumerate_induced_paths(const Graph& g, Vertex v1, const VertexSet& R, std::optional<int> t_limit,
                                        const PathSink& sink) {
  g.check_vertex(v1, "source");
  g.check_set(R, "target set");
  if (R.empty()) throw InputError("target set is empty");
  if (R.contains(v1)) throw InputError("source lies in the target set");
  VertexSet start = g.empty_set();
  start.insert(v1);
  if (closed_neighborhood(g, start).intersects(R)) throw InputError("target set meets the closed neighborhood of the source");

  const VertexSet targets = open_neighborhood(g, R);
  VertexSet allowed = g.all_vertices();
  allowed.erase(v1);
  detail::PathSearch search(g, allowed, targets, 1, t_limit.value_or(std::numeric_limits<int>::max()));

  PathEnumeration out;
  InducedPath path;
  const bool finished = search.run(closed_neighborhood(g, start), g.neighbors(v1),
                                   [&](const std::vector<Vertex>& tail, int depth) {
                                     path.seq.assign(1, v1);
                                     path.seq.insert(path.seq.end(), tail.begin(), tail.end());
                                     path.branch_depth = depth;
                                     ++out.count;
                                     return sink(path);
                                   });
  out.nodes = search.nodes();
  out.stopped = !finished;
  return out;
}

std::string format_path(const Graph& g, const InducedPath& path) {
  std::ostringstream os;
  for (Vertex v : path.seq) os << g.external_id(v) << ' ';
  os << "bd=" << path.branch_depth;
  return os.str();
}

}  // namespace tconn
