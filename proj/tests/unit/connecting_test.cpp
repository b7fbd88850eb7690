#include <cmath>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "tconn/connecting.hpp"
#include "tconn/errors.hpp"
#include "tconn/generators.hpp"
#include "tconn/oracles.hpp"
#include "test_util.hpp"

namespace tconn {
namespace {

using testing::collect_minimal;
using testing::collect_raw;
using testing::letters;
using testing::set_of;

TEST(ContractTerminalEdges, ConnectedTerminalsCollapse) {
  const Graph g = letters(5, {"ab", "bc", "cd", "de"});
  const ReducedInstance r = contract_terminal_edges(g, set_of(g, "abc"));
  EXPECT_EQ(r.terminals.size(), 1);
  EXPECT_EQ(r.graph.size(), 3);
  EXPECT_EQ(r.map.expand(r.terminals), set_of(g, "abc"));
}

TEST(ContractTerminalEdges, IndependentTerminalsUnchanged) {
  const Graph g = letters(4, {"ab", "bc", "cd"});
  const ReducedInstance r = contract_terminal_edges(g, set_of(g, "ac"));
  EXPECT_EQ(r.graph, g);
  EXPECT_EQ(r.terminals, set_of(g, "ac"));
}

TEST(ContractTerminalEdges, PathWithAdjacentTerminals) {
  // P4 a-b-c-d, T={a,b,d}: contracting ab leaves a path of three with two terminals.
  const Graph g = letters(4, {"ab", "bc", "cd"});
  const VertexSet t = set_of(g, "abd");
  const ReducedInstance r = contract_terminal_edges(g, t);
  EXPECT_EQ(r.graph.size(), 3);
  EXPECT_EQ(r.graph.edge_count(), 2);
  EXPECT_EQ(to_external(r.graph, r.terminals), (std::vector<int>{1, 4}));
  // Both sides of the correspondence hold exactly one minimal set.
  EXPECT_EQ(oracle::minimal_connecting(g, t).size(), 1U);
  EXPECT_EQ(oracle::minimal_connecting(r.graph, r.terminals).size(), 1U);
}

TEST(ConnectingSupersets, ForcedConnector) {
  const Graph g = letters(3, {"ab", "bc"});
  const auto raw = collect_raw(g, set_of(g, "ac"));
  ASSERT_EQ(raw.size(), 1U);
  EXPECT_EQ(raw[0], g.all_vertices());
}

TEST(ConnectingSupersets, FourCycleHasBothArcs) {
  const Graph g = letters(4, {"ab", "bc", "cd", "da"});
  const auto raw = collect_raw(g, set_of(g, "ac"));
  const std::set<VertexSet> family(raw.begin(), raw.end());
  EXPECT_TRUE(family.count(set_of(g, "abc")));
  EXPECT_TRUE(family.count(set_of(g, "acd")));
  EXPECT_EQ(oracle::minimal_connecting(g, set_of(g, "ac")),
            (std::set<VertexSet>{set_of(g, "abc"), set_of(g, "acd")}));
}

TEST(ConnectingSupersets, StarLeaves) {
  const Graph g = letters(4, {"ab", "ac", "ad"});  // centre a
  const auto raw = collect_raw(g, set_of(g, "bcd"));
  ASSERT_GE(raw.size(), 1U);
  EXPECT_TRUE(std::count(raw.begin(), raw.end(), g.all_vertices()) >= 1);
}

TEST(ConnectingSupersets, SplitTerminalsGiveNothing) {
  const Graph g = letters(4, {"ab", "cd"});
  EXPECT_TRUE(collect_raw(g, set_of(g, "ac")).empty());
  EXPECT_THROW(collect_raw(g, set_of(g, "a")), InputError);
}

TEST(IsMinimalConnecting, Examples) {
  const Graph p3 = letters(3, {"ab", "bc"});
  EXPECT_TRUE(is_minimal_connecting(p3, set_of(p3, "ac"), p3.all_vertices()));
  const Graph c4 = letters(4, {"ab", "bc", "cd", "da"});
  EXPECT_FALSE(is_minimal_connecting(c4, set_of(c4, "ac"), c4.all_vertices()));
  const Graph k3 = letters(3, {"ab", "bc", "ca"});
  EXPECT_TRUE(is_minimal_connecting(k3, set_of(k3, "ab"), set_of(k3, "ab")));
  EXPECT_FALSE(is_minimal_connecting(k3, set_of(k3, "ab"), k3.all_vertices()));
  EXPECT_FALSE(is_minimal_connecting(p3, set_of(p3, "ac"), set_of(p3, "ab")));
}

TEST(EnumerateMinimalConnecting, Examples) {
  const Graph c4 = letters(4, {"ab", "bc", "cd", "da"});
  EXPECT_EQ(collect_minimal(c4, set_of(c4, "ac")).size(), 2U);

  const Figure1Instance f = gen_figure1({2, 1, Figure1Variant::Exact3i});
  EXPECT_EQ(collect_minimal(f.graph, f.terminals()).size(), 9U);

  const Graph k4 = gen_named(NamedGraph::Complete, 4);
  const auto pair = collect_minimal(k4, VertexSet(4, {1, 2}));
  EXPECT_EQ(pair, (std::set<VertexSet>{VertexSet(4, {1, 2})}));

  const Graph split = letters(4, {"ab", "cd"});
  EXPECT_TRUE(collect_minimal(split, set_of(split, "ac")).empty());
}

TEST(EnumerateMinimalConnecting, DegenerateTerminalSets) {
  const Graph g = letters(3, {"ab", "bc"});
  EXPECT_TRUE(collect_minimal(g, g.empty_set()).empty());
  EXPECT_EQ(collect_minimal(g, set_of(g, "b")), (std::set<VertexSet>{set_of(g, "b")}));
  // Connected terminal set reduces to one terminal and is its own answer.
  EXPECT_EQ(collect_minimal(g, set_of(g, "ab")), (std::set<VertexSet>{set_of(g, "ab")}));
}

TEST(EnumerateMinimalConnecting, StopsWhenAsked) {
  const Figure1Instance f = gen_figure1({3, 1, Figure1Variant::Exact3i});
  int seen = 0;
  const ConnectingResult r = enumerate_minimal_connecting(f.graph, f.terminals(), [&](const VertexSet&) {
    return ++seen == 4 ? Flow::Stop : Flow::Continue;
  });
  EXPECT_EQ(seen, 4);
  EXPECT_TRUE(r.stopped);
}

TEST(BruteForceConnecting, Examples) {
  auto count = [](const Graph& g, const VertexSet& t) {
    std::set<VertexSet> out;
    brute_force_connecting(g, t, [&](const VertexSet& s) {
      out.insert(s);
      return Flow::Continue;
    });
    return out;
  };
  const Graph p4 = letters(4, {"ab", "bc", "cd"});
  EXPECT_EQ(count(p4, set_of(p4, "ad")), (std::set<VertexSet>{p4.all_vertices()}));

  // C5 with two non-adjacent terminals: the two arcs.
  const Graph c5 = gen_named(NamedGraph::Cycle, 5);
  const VertexSet t(5, {0, 2});
  EXPECT_EQ(count(c5, t), (std::set<VertexSet>{VertexSet(5, {0, 1, 2}), VertexSet(5, {0, 2, 3, 4})}));
  EXPECT_EQ(count(c5, t), oracle::minimal_connecting(c5, t));

  EXPECT_EQ(count(p4, p4.all_vertices()).size(), 1U);
  const Graph split = letters(4, {"ab", "cd"});
  EXPECT_TRUE(count(split, split.all_vertices()).empty());
}

TEST(MinimalSetCountBound, Examples) {
  const CountBound b93 = minimal_set_count_bound(9, 3);
  ASSERT_TRUE(b93.exact.has_value());
  EXPECT_EQ(*b93.exact, 54U);
  EXPECT_NEAR(b93.ln_value, std::log(54.0), 1e-12);

  const CountBound b62 = minimal_set_count_bound(6, 2);
  EXPECT_FALSE(b62.exact.has_value());
  EXPECT_NEAR(std::exp(b62.ln_value), std::pow(3.0, 4.0 / 3.0), 1e-9);
  EXPECT_NEAR(std::exp(b62.ln_value), 4.327, 1e-3);

  for (int n = 6; n <= 40; ++n)
    EXPECT_NEAR(minimal_set_count_bound(n, 2).ln_value, (n - 2) / 3.0 * std::log(3.0), 1e-12);

  EXPECT_THROW(minimal_set_count_bound(9, 4), InputError);
  EXPECT_THROW(minimal_set_count_bound(9, 1), InputError);
}

TEST(MinimalSetCountBound, LargeValuesStayFinite) {
  const CountBound b = minimal_set_count_bound(3000, 1000);
  EXPECT_TRUE(std::isfinite(b.ln_value));
  EXPECT_FALSE(b.exact.has_value());
}

struct RandomCase {
  Graph graph;
  VertexSet terminals;
};

std::vector<RandomCase> random_cases(std::uint64_t seed, int count, int max_n) {
  std::mt19937_64 rng(seed);
  std::vector<RandomCase> out;
  for (int i = 0; i < count; ++i) {
    const int n = 5 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 4));
    const double p = 0.2 + 0.1 * static_cast<double>(rng() % 5);
    Graph g = gen_random(n, p, rng());
    const int t = 2 + static_cast<int>(rng() % 3);
    out.push_back({std::move(g), testing::random_subset(n, t, rng)});
  }
  return out;
}

TEST(EnumerateMinimalConnecting, MatchesOracleOnBothStrategies) {
  for (const auto& c : random_cases(11, 120, 12)) {
    const auto want = oracle::minimal_connecting(c.graph, c.terminals);
    for (auto strategy : {ConnectingStrategy::Auto, ConnectingStrategy::Branching, ConnectingStrategy::BruteForce}) {
      for (auto mode : {PathMode::Rebuild, PathMode::Incremental}) {
        ConnectingOptions opt{strategy, mode};
        EXPECT_EQ(collect_minimal(c.graph, c.terminals, opt), want);
      }
    }
  }
}

TEST(EnumerateMinimalConnecting, EmitsEachSetOnce) {
  for (const auto& c : random_cases(12, 60, 12)) {
    std::vector<VertexSet> all;
    enumerate_minimal_connecting(
        c.graph, c.terminals,
        [&](const VertexSet& s) {
          all.push_back(s);
          return Flow::Continue;
        },
        {ConnectingStrategy::Branching, PathMode::Rebuild});
    std::set<VertexSet> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size());
    for (const auto& s : all) EXPECT_TRUE(is_minimal_connecting(c.graph, c.terminals, s));
  }
}

TEST(ConnectingSupersets, ContainsEveryMinimalSet) {
  for (const auto& c : random_cases(13, 120, 12)) {
    const auto raw = collect_raw(c.graph, c.terminals);
    const std::set<VertexSet> family(raw.begin(), raw.end());
    for (const auto& s : oracle::minimal_connecting(c.graph, c.terminals)) EXPECT_TRUE(family.count(s));
    for (const auto& s : raw) {
      EXPECT_TRUE(c.terminals.is_subset_of(s));
      EXPECT_TRUE(is_connected(c.graph, s));
    }
  }
}

TEST(ConnectingSupersets, IncrementalMatchesRebuild) {
  for (const auto& c : random_cases(14, 100, 13)) {
    EXPECT_EQ(collect_raw(c.graph, c.terminals, PathMode::Rebuild),
              collect_raw(c.graph, c.terminals, PathMode::Incremental));
  }
}

TEST(ConnectingSupersets, RawOutputRespectsNeighborhoodBound) {
  int checked = 0;
  for (const auto& c : random_cases(15, 300, 14)) {
    const ReducedInstance r = contract_terminal_edges(c.graph, c.terminals);
    const int t = r.terminals.size();
    const int n = r.graph.size();
    if (t < 2 || 3 * t > n) continue;
    ++checked;
    const int free = n - t;
    std::map<int, long> by_r;
    for (const auto& s : collect_raw(r.graph, r.terminals))
      ++by_r[(closed_neighborhood(r.graph, s) - r.terminals).size()];
    long cumulative = 0;
    for (int radius = 0; radius <= free; ++radius) {
      cumulative += by_r.count(radius) ? by_r[radius] : 0;
      if (cumulative > 0) EXPECT_LE(std::log(static_cast<double>(cumulative)), raw_output_bound_ln(free, t, radius) + 1e-9);
    }
  }
  EXPECT_GE(checked, 30);
}

TEST(ContractTerminalEdges, PreservesMinimalSets) {
  for (const auto& c : random_cases(16, 120, 12)) {
    const ReducedInstance r = contract_terminal_edges(c.graph, c.terminals);
    const auto before = oracle::minimal_connecting(c.graph, c.terminals);
    const auto after = oracle::minimal_connecting(r.graph, r.terminals);
    EXPECT_EQ(before.size(), after.size());
    std::set<VertexSet> expanded;
    for (const auto& s : after) expanded.insert(r.map.expand(s));
    EXPECT_EQ(expanded, before);
  }
}

TEST(MinimalSetCountBound, HoldsOnRandomInstances) {
  for (const auto& c : random_cases(17, 150, 14)) {
    const int t = c.terminals.size();
    if (3 * t > c.graph.size()) continue;
    const auto count = collect_minimal(c.graph, c.terminals).size();
    if (count > 0)
      EXPECT_LE(std::log(static_cast<double>(count)), minimal_set_count_bound(c.graph.size(), t).ln_value + 1e-9);
  }
}

TEST(ConnectorView, ComponentAndContractedRoot) {
  // a-b-c-d-e path, T = {a, c, e}, C = {b}: C_u = {a,b,c}, T' = {e}.
  const Graph g = letters(5, {"ab", "bc", "cd", "de"});
  const VertexSet t = set_of(g, "ace");
  const ConnectorState state{set_of(g, "b"), g.empty_set(), 1};
  const ConnectorView view = make_connector_view(g, t, 0, state);
  EXPECT_EQ(view.component, set_of(g, "abc"));
  EXPECT_EQ(view.remaining_terminals, set_of(g, "e"));
  EXPECT_EQ(view.contracted.graph.size(), 3);
  EXPECT_FALSE(closed_neighborhood(view.contracted.graph, VertexSet(3, {0})).contains(2));
}

}  // namespace
}  // namespace tconn
