#include "tconn/oracles.hpp"

#include <bit>
#include <cstdint>

#include "tconn/errors.hpp"

namespace tconn::oracle {

namespace {

using Mask = std::uint32_t;

struct MaskGraph {
  std::vector<Mask> adj;

  explicit MaskGraph(const Graph& g) : adj(static_cast<std::size_t>(g.size()), 0) {
    for (Vertex u = 0; u < g.size(); ++u)
      for (Vertex v = 0; v < g.size(); ++v)
        if (g.adjacent(u, v)) adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
  }

  bool connected(Mask s) const {
    if (s == 0) return true;
    Mask seen = s & (~s + 1);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == s;
  }
};

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

VertexSet from_mask(int n, Mask m) {
  VertexSet s(n);
  for (; m != 0; m &= m - 1) s.insert(std::countr_zero(m));
  return s;
}

void refuse_above(const Graph& g, int cap, const char* who) {
  if (g.size() > cap)
    throw InputError(std::string(who) + " oracle refuses graphs above " + std::to_string(cap) + " vertices");
}

}  // namespace

std::set<VertexSet> minimal_connecting(const Graph& g, const VertexSet& terminals, int cap) {
  refuse_above(g, std::min(cap, 31), "minimal connecting set");
  g.check_set(terminals, "terminal set");
  std::set<VertexSet> out;
  if (terminals.empty()) return out;

  const MaskGraph mg(g);
  const Mask base = to_mask(terminals);
  std::vector<Vertex> free;
  for (Vertex v = 0; v < g.size(); ++v)
    if (!terminals.contains(v)) free.push_back(v);
  const std::size_t k = free.size();
  const std::size_t count = std::size_t{1} << k;

  auto expand = [&](std::size_t a) {
    Mask s = base;
    for (std::size_t i = 0; i < k; ++i)
      if ((a >> i) & 1U) s |= Mask{1} << free[i];
    return s;
  };

  // has_connecting[a]: some subset of T ∪ a (containing T) is T-connecting.
  std::vector<char> has_connecting(count, 0);
  for (std::size_t a = 0; a < count; ++a) {
    const bool connecting = mg.connected(expand(a));
    bool below = false;
    for (std::size_t i = 0; i < k && !below; ++i)
      if ((a >> i) & 1U) below = has_connecting[a ^ (std::size_t{1} << i)] != 0;
    has_connecting[a] = static_cast<char>(connecting || below);
    if (connecting && !below) out.insert(from_mask(g.size(), expand(a)));
  }
  return out;
}

bool literal_is_minimal_connecting(const Graph& g, const VertexSet& terminals, const VertexSet& s) {
  refuse_above(g, 31, "literal minimality");
  if (!terminals.is_subset_of(s)) return false;
  const MaskGraph mg(g);
  if (!mg.connected(to_mask(s))) return false;
  const auto extra = (s - terminals).to_vector();
  if (extra.size() > 20) throw InputError("literal minimality check refuses more than 20 non-terminals");
  const Mask base = to_mask(terminals);
  const std::size_t full = (std::size_t{1} << extra.size()) - 1;
  for (std::size_t a = 0; a < full; ++a) {
    Mask sub = base;
    for (std::size_t i = 0; i < extra.size(); ++i)
      if ((a >> i) & 1U) sub |= Mask{1} << extra[i];
    if (mg.connected(sub)) return false;
  }
  return true;
}

std::set<std::vector<Vertex>> induced_paths(const Graph& g, Vertex v1, const VertexSet& R) {
  refuse_above(g, kPathCap, "induced path");
  g.check_vertex(v1, "source");
  g.check_set(R, "target set");
  const MaskGraph mg(g);
  const Mask r = to_mask(R);
  Mask closed_r = r;
  for (Mask m = r; m != 0; m &= m - 1) closed_r |= mg.adj[static_cast<std::size_t>(std::countr_zero(m))];
  const Mask open_r = closed_r & ~r;

  auto in = [](Mask m, Vertex v) { return ((m >> v) & 1U) != 0; };

  auto satisfies = [&](const std::vector<Vertex>& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        const bool edge = in(mg.adj[static_cast<std::size_t>(p[i])], p[j]);
        if (edge != (j == i + 1)) return false;
      }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (in(closed_r, p[i])) return false;
    return in(open_r, p.back());
  };

  std::set<std::vector<Vertex>> out;
  std::vector<Vertex> path{v1};
  Mask used = Mask{1} << v1;
  auto dfs = [&](auto&& self) -> void {
    if (satisfies(path)) out.insert(path);
    const Vertex last = path.back();
    if (in(closed_r, last)) return;
    for (Vertex w = 0; w < g.size(); ++w) {
      if (in(used, w) || !in(mg.adj[static_cast<std::size_t>(last)], w)) continue;
      // A chord to an earlier vertex cannot be removed by extending further.
      if ((mg.adj[static_cast<std::size_t>(w)] & used & ~(Mask{1} << last)) != 0) continue;
      path.push_back(w);
      used |= Mask{1} << w;
      self(self);
      used &= ~(Mask{1} << w);
      path.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

bool two_dcs(const Graph& g, const VertexSet& z1, const VertexSet& z2) {
  refuse_above(g, kDcsCap, "2-DCS");
  const MaskGraph mg(g);
  const Mask m1 = to_mask(z1);
  const Mask m2 = to_mask(z2);
  std::vector<Vertex> free;
  for (Vertex v = 0; v < g.size(); ++v)
    if (!z1.contains(v) && !z2.contains(v)) free.push_back(v);

  // Base-3 counter: 0 = neither, 1 = A1, 2 = A2.
  std::vector<int> digit(free.size(), 0);
  while (true) {
    Mask a1 = m1;
    Mask a2 = m2;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (digit[i] == 1) a1 |= Mask{1} << free[i];
      if (digit[i] == 2) a2 |= Mask{1} << free[i];
    }
    if (mg.connected(a1) && mg.connected(a2)) return true;
    std::size_t i = 0;
    while (i < digit.size() && digit[i] == 2) digit[i++] = 0;
    if (i == digit.size()) return false;
    ++digit[i];
  }
}

BigInt max_leaves(int t) {
  if (t < 0 || t > 200) throw InputError("leaf-count oracle supports 0 <= t <= 200");
  std::vector<BigInt> best(static_cast<std::size_t>(t) + 1, 1);
  for (int s = 1; s <= t; ++s) {
    BigInt b = 1;
    for (int c = 1; c <= s; ++c) {
      BigInt leaves = c * best[static_cast<std::size_t>(s - c)];
      if (leaves > b) b = leaves;
    }
    best[static_cast<std::size_t>(s)] = b;
  }
  return best[static_cast<std::size_t>(t)];
}

}  // namespace tconn::oracle
