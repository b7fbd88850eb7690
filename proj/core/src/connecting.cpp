#include "tconn/connecting.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <set>

#include "tconn/detail/path_search.hpp"
#include "tconn/errors.hpp"
#include "tconn/induced_paths.hpp"

namespace tconn {

ConnectorView make_connector_view(const Graph& g, const VertexSet& terminals, Vertex root,
                                  const ConnectorState& state) {
  ConnectorView view;
  view.component = component_of(g, terminals | state.connector, root);
  view.remaining_terminals = terminals - view.component;
  view.contracted = contract_set(g, view.component, root);
  return view;
}

ReducedInstance contract_terminal_edges(const Graph& g, const VertexSet& terminals) {
  g.check_set(terminals, "terminal set");
  ReducedInstance out{g, terminals, ContractionMap::identity(g.size())};
  while (true) {
    const auto blocks = components(out.graph, out.terminals);
    auto it = std::find_if(blocks.begin(), blocks.end(), [](const VertexSet& b) { return b.size() > 1; });
    if (it == blocks.end()) return out;
    Contracted c = contract_set(out.graph, *it, it->first());
    VertexSet reduced_terminals = c.graph.empty_set();
    for (Vertex v = 0; v < c.graph.size(); ++v)
      if (out.terminals.contains(c.map.block(v).front())) reduced_terminals.insert(v);
    out.map = out.map.then(c.map);
    out.graph = std::move(c.graph);
    out.terminals = std::move(reduced_terminals);
  }
}

namespace {

class BranchingRun {
 public:
  BranchingRun(const Graph& g, const VertexSet& terminals, const SetSink& sink, PathMode mode)
      : g_(g), terminals_(terminals), root_(terminals.first()), sink_(sink), mode_(mode) {}

  ConnectingResult run() {
    ConnectorState start{g_.empty_set(), g_.empty_set(), 0};
    result_.stopped = !visit(start);
    return result_;
  }

 private:
  bool visit(const ConnectorState& state) {
    ++result_.nodes;
    assert(!state.excluded.intersects(terminals_));
    const VertexSet current = terminals_ | state.connector;
    if (is_connected(g_, current)) {
      ++result_.raw;
      ++result_.emitted;
      return sink_(current) == Flow::Continue;
    }

    const VertexSet component = component_of(g_, current, root_);
    const VertexSet remaining = terminals_ - component;
    const VertexSet boundary = open_neighborhood(g_, component);
    assert(!boundary.intersects(remaining));

    auto branch = [&](const std::vector<Vertex>& tail) {
      ConnectorState child{state.connector, state.excluded, state.depth + 1};
      for (Vertex w : tail) child.connector.insert(w);
      const Vertex second = tail.front();
      for (Vertex w : boundary) {
        if (w >= second) break;
        child.excluded.insert(w);
      }
      return visit(child) ? Flow::Continue : Flow::Stop;
    };

    if (mode_ == PathMode::Incremental) return search_in_place(state, component, remaining, boundary, branch);
    return search_contracted(state, component, remaining, branch);
  }

  // Treats C_u as the root without materialising the contracted graph.
  template <class Branch>
  bool search_in_place(const ConnectorState& state, const VertexSet& component, const VertexSet& remaining,
                       const VertexSet& boundary, Branch& branch) {
    const VertexSet allowed = g_.all_vertices() - component - state.excluded;
    const VertexSet targets = open_neighborhood(g_, remaining) & allowed;
    const VertexSet children = boundary - state.excluded;
    detail::PathSearch search(g_, allowed, targets, component.size(), std::numeric_limits<int>::max());
    const bool finished = search.run(component | children, children,
                                     [&](const std::vector<Vertex>& tail, int) { return branch(tail); });
    return finished;
  }

  // G'[V(G') \ X] with C_u contracted into the root terminal, then the
  // ordinary path enumeration from the root towards the remaining terminals.
  template <class Branch>
  bool search_contracted(const ConnectorState& state, const VertexSet& component, const VertexSet& remaining,
                         Branch& branch) {
    const Contracted contracted = contract_set(g_, component, root_);
    const Graph& gc = contracted.graph;
    // Only the root's block is not a singleton.
    std::vector<Vertex> to_g(static_cast<std::size_t>(gc.size()));
    VertexSet keep = gc.empty_set();
    VertexSet targets_c = gc.empty_set();
    Vertex root_c = -1;
    for (Vertex v = 0; v < gc.size(); ++v) {
      const auto& block = contracted.map.block(v);
      const Vertex original = block.size() == 1 ? block.front() : root_;
      to_g[static_cast<std::size_t>(v)] = original;
      if (original == root_) root_c = v;
      if (!state.excluded.contains(original) || original == root_) keep.insert(v);
      if (remaining.contains(original)) targets_c.insert(v);
    }
    const Graph h = induced_subgraph(gc, keep);
    const std::vector<Vertex> h_to_c = keep.to_vector();
    const VertexSet targets_h = restrict_to_induced(keep, targets_c);
    Vertex root_h = 0;
    while (h_to_c[static_cast<std::size_t>(root_h)] != root_c) ++root_h;

    std::vector<Vertex> tail;
    const PathEnumeration paths =
        enumerate_induced_paths(h, root_h, targets_h, std::nullopt, [&](const InducedPath& p) {
          tail.clear();
          for (std::size_t i = 1; i < p.seq.size(); ++i)
            tail.push_back(to_g[static_cast<std::size_t>(h_to_c[static_cast<std::size_t>(p.seq[i])])]);
          return branch(tail);
        });
    return !paths.stopped;
  }

  const Graph& g_;
  const VertexSet& terminals_;
  Vertex root_;
  const SetSink& sink_;
  PathMode mode_;
  ConnectingResult result_;
};

bool terminals_share_component(const Graph& g, const VertexSet& terminals) {
  const Vertex first = terminals.first();
  return first == -1 || terminals.is_subset_of(component_of(g, g.all_vertices(), first));
}

}  // namespace

ConnectingResult enumerate_connecting_supersets(const Graph& g, const VertexSet& terminals, const SetSink& sink,
                                                PathMode mode) {
  g.check_set(terminals, "terminal set");
  if (terminals.size() < 2) throw InputError("branching enumeration needs at least two terminals");
  if (!terminals_share_component(g, terminals)) return {};
  return BranchingRun(g, terminals, sink, mode).run();
}

bool is_minimal_connecting(const Graph& g, const VertexSet& terminals, const VertexSet& s) {
  g.check_set(terminals, "terminal set");
  g.check_set(s);
  if (terminals.empty()) return s.empty();
  if (!terminals.is_subset_of(s) || !is_connected(g, s)) return false;
  const Vertex anchor = terminals.first();
  // Non-minimal iff dropping a single non-terminal keeps T in one block.
  for (Vertex v : s - terminals) {
    VertexSet rest = s;
    rest.erase(v);
    if (terminals.is_subset_of(component_of(g, rest, anchor))) return false;
  }
  return true;
}

ConnectingResult brute_force_connecting(const Graph& g, const VertexSet& terminals, const SetSink& sink) {
  g.check_set(terminals, "terminal set");
  ConnectingResult out;
  out.brute_force = true;
  if (terminals.empty()) return out;
  const auto free = (g.all_vertices() - terminals).to_vector();
  if (free.size() > 62) throw InputError("brute force supports at most 62 non-terminals");
  const std::uint64_t limit = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    VertexSet s = terminals;
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((mask >> i) & 1U) s.insert(free[i]);
    ++out.nodes;
    ++out.raw;
    if (!is_minimal_connecting(g, terminals, s)) continue;
    ++out.emitted;
    if (sink(s) == Flow::Stop) {
      out.stopped = true;
      break;
    }
  }
  return out;
}

ConnectingResult enumerate_minimal_connecting(const Graph& g, const VertexSet& terminals, const SetSink& sink,
                                              const ConnectingOptions& options) {
  g.check_set(terminals, "terminal set");
  ConnectingResult out;
  if (terminals.empty()) return out;
  auto emit_one = [&](const VertexSet& s) {
    out.raw = 1;
    out.emitted = 1;
    out.stopped = sink(s) == Flow::Stop;
    return out;
  };
  if (terminals.size() == 1) return emit_one(terminals);
  if (!terminals_share_component(g, terminals)) return out;

  const ReducedInstance reduced = contract_terminal_edges(g, terminals);
  const int t = reduced.terminals.size();
  if (t == 1) return emit_one(terminals);

  bool brute = options.strategy == ConnectingStrategy::BruteForce;
  if (options.strategy == ConnectingStrategy::Auto) brute = 3 * t > reduced.graph.size();

  if (brute) {
    ConnectingResult r = brute_force_connecting(reduced.graph, reduced.terminals, [&](const VertexSet& s) {
      return sink(reduced.map.expand(s));
    });
    return r;
  }

  std::set<VertexSet> seen;
  ConnectingResult r = enumerate_connecting_supersets(
      reduced.graph, reduced.terminals,
      [&](const VertexSet& s) {
        if (!is_minimal_connecting(reduced.graph, reduced.terminals, s)) return Flow::Continue;
        if (!seen.insert(s).second) return Flow::Continue;
        ++out.emitted;
        return sink(reduced.map.expand(s));
      },
      options.path_mode);
  r.emitted = out.emitted;
  return r;
}

namespace {

double ln_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

CountBound minimal_set_count_bound(int n, int t) {
  if (t < 2 || 3 * t > n)
    throw InputError("count bound needs 2 <= |T| <= n/3 (n=" + std::to_string(n) + ", |T|=" + std::to_string(t) + ")");
  const int free = n - t;
  CountBound out;
  out.ln_value = ln_binomial(free, t - 2) + free / 3.0 * std::log(3.0);
  if (free % 3 == 0) {
    BigInt exact = boost::multiprecision::pow(BigInt(3), free / 3);
    BigInt binom = 1;
    for (int i = 1; i <= t - 2; ++i) binom = binom * (free - t + 2 + i) / i;
    exact *= binom;
    if (exact <= std::numeric_limits<std::uint64_t>::max()) out.exact = exact.convert_to<std::uint64_t>();
  }
  return out;
}

double raw_output_bound_ln(int non_terminals, int t, int r) {
  if (t < 2 || non_terminals < t - 2 || r < 0) throw InputError("raw output bound: invalid arguments");
  return ln_binomial(non_terminals, t - 2) + r / 3.0 * std::log(3.0);
}

}  // namespace tconn
