#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "tconn/dcs.hpp"
#include "tconn/errors.hpp"
#include "tconn/generators.hpp"
#include "tconn/oracles.hpp"
#include "test_util.hpp"

namespace tconn {
namespace {

using testing::letters;
using testing::set_of;

TEST(SelectStrategy, Examples) {
  EXPECT_EQ(select_strategy(100, 5, 50), DcsStrategy::EnumerateMinimal);
  EXPECT_EQ(select_strategy(100, 20, 30), DcsStrategy::SubsetLoop);
  EXPECT_EQ(select_strategy(24, 2, 2), DcsStrategy::EnumerateMinimal);
  EXPECT_EQ(select_strategy(100, 50, 5), DcsStrategy::EnumerateMinimal);
  EXPECT_EQ(select_strategy(10000, 839, 900), DcsStrategy::EnumerateMinimal);
  EXPECT_EQ(select_strategy(10000, 840, 900), DcsStrategy::SubsetLoop);
  EXPECT_THROW(select_strategy(10, 0, 2), InputError);
  EXPECT_THROW(select_strategy(10, 6, 6), InputError);
}

TEST(Stage2Check, Examples) {
  const Graph p5 = letters(5, {"ab", "bc", "cd", "de"});
  EXPECT_EQ(stage2_check(p5, set_of(p5, "de"), set_of(p5, "ab")), set_of(p5, "cde"));
  EXPECT_FALSE(stage2_check(p5, set_of(p5, "ae"), set_of(p5, "c")).has_value());
  EXPECT_FALSE(stage2_check(p5, set_of(p5, "c"), set_of(p5, "bc")).has_value());
}

TEST(Solve2Dcs, PathSplitsInTwo) {
  const Graph p4 = letters(4, {"ab", "bc", "cd"});
  const DcsInstance inst{p4, set_of(p4, "a"), set_of(p4, "d")};
  const DcsResult r = solve_2dcs(inst);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(verify_witness(inst, *r.witness));
  EXPECT_TRUE(set_of(p4, "a").is_subset_of(r.witness->a1));
  EXPECT_TRUE(set_of(p4, "d").is_subset_of(r.witness->a2));
}

TEST(Solve2Dcs, SeparatedTerminalsHaveNoSolution) {
  const Graph p3 = letters(3, {"ab", "bc"});
  const DcsInstance inst{p3, set_of(p3, "ac"), set_of(p3, "b")};
  EXPECT_FALSE(solve_2dcs(inst).witness.has_value());
  EXPECT_FALSE(oracle::two_dcs(p3, inst.z1, inst.z2));
}

TEST(Solve2Dcs, SixCycleWithAlternatingPairs) {
  const Graph c6 = gen_named(NamedGraph::Cycle, 6);
  // Z1 = {0, 1}, Z2 = {3, 4}: split into two arcs.
  const DcsInstance yes{c6, VertexSet(6, {0, 1}), VertexSet(6, {3, 4})};
  const DcsResult r = solve_2dcs(yes);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(verify_witness(yes, *r.witness));
  // Z1 = {0, 3}, Z2 = {1, 4}: interleaved on the cycle.
  const DcsInstance no{c6, VertexSet(6, {0, 3}), VertexSet(6, {1, 4})};
  EXPECT_FALSE(solve_2dcs(no).witness.has_value());
}

TEST(Solve2Dcs, SwapKeepsOrientation) {
  const Graph p5 = letters(5, {"ab", "bc", "cd", "de"});
  const DcsInstance inst{p5, set_of(p5, "abc"), set_of(p5, "e")};
  const DcsResult r = solve_2dcs(inst);
  EXPECT_TRUE(r.swapped);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(set_of(p5, "abc").is_subset_of(r.witness->a1));
  EXPECT_TRUE(verify_witness(inst, *r.witness));
}

TEST(Solve2Dcs, RejectsInvalidInstances) {
  const Graph split = letters(4, {"ab", "cd"});
  EXPECT_THROW(solve_2dcs({split, set_of(split, "a"), set_of(split, "c")}), InputError);
  const Graph p3 = letters(3, {"ab", "bc"});
  EXPECT_THROW(solve_2dcs({p3, set_of(p3, "a"), set_of(p3, "ab")}), InputError);
  EXPECT_THROW(solve_2dcs({p3, p3.empty_set(), set_of(p3, "c")}), InputError);
}

TEST(VerifyWitness, RejectsBadWitnesses) {
  const Graph p4 = letters(4, {"ab", "bc", "cd"});
  const DcsInstance inst{p4, set_of(p4, "a"), set_of(p4, "d")};
  EXPECT_TRUE(verify_witness(inst, {set_of(p4, "ab"), set_of(p4, "cd")}));
  EXPECT_FALSE(verify_witness(inst, {set_of(p4, "abc"), set_of(p4, "cd")}));  // overlap
  EXPECT_FALSE(verify_witness(inst, {set_of(p4, "ac"), set_of(p4, "d")}));    // disconnected
  EXPECT_FALSE(verify_witness(inst, {set_of(p4, "b"), set_of(p4, "cd")}));    // misses Z1
}

TEST(RuntimeCurve, ThresholdAndShape) {
  const auto curve = runtime_bound_curve(kDcsAlphaThreshold, 1e-4);
  ASSERT_FALSE(curve.empty());
  EXPECT_NEAR(curve.back().alpha, kDcsAlphaThreshold, 1e-9);
  EXPECT_LE(curve.back().ln_base, std::log(1.7804) + 1e-6);
  for (std::size_t i = 1; i < curve.size(); ++i) EXPECT_GE(curve[i].ln_base, curve[i - 1].ln_base - 1e-12);
  EXPECT_NEAR(curve.front().base, std::cbrt(3.0), 5e-3);
  EXPECT_LE(subset_loop_base_ln(kDcsAlphaThreshold), std::log(1.7804) + 1e-6);
  EXPECT_NEAR(subset_loop_base_ln(0.25), 0.5 * std::log(2.0), 1e-12);
  EXPECT_NEAR(enumeration_base_ln(0.0), std::log(3.0) / 3, 1e-12);
  EXPECT_THROW(runtime_bound_curve(0.1, 0.0), InputError);
  EXPECT_THROW(runtime_bound_curve(0.6, 0.1), InputError);
}

TEST(RuntimeCurve, ZeroBeyondOneThird) {
  const auto curve = runtime_bound_curve(0.5, 0.05);
  EXPECT_EQ(curve.back().base, 0.0);
}

TEST(Solve2Dcs, MatchesOracleInBothRegimes) {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 120) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const Graph g = gen_random(n, 0.25 + 0.1 * static_cast<double>(rng() % 4), rng());
    if (!is_connected(g, g.all_vertices())) continue;
    const int k1 = 1 + static_cast<int>(rng() % 3), k2 = 1 + static_cast<int>(rng() % 3);
    if (k1 + k2 > n) continue;
    const VertexSet both = testing::random_subset(n, k1 + k2, rng);
    VertexSet z1(n);
    for (Vertex v : both) {
      if (z1.size() == k1) break;
      z1.insert(v);
    }
    const DcsInstance inst{g, z1, both - z1};
    ++checked;
    const bool want = oracle::two_dcs(g, inst.z1, inst.z2);
    for (auto force : {DcsStrategy::EnumerateMinimal, DcsStrategy::SubsetLoop}) {
      const DcsResult r = solve_2dcs(inst, {force, false});
      EXPECT_EQ(r.witness.has_value(), want);
      if (r.witness) EXPECT_TRUE(verify_witness(inst, *r.witness));
    }
  }
}

}  // namespace
}  // namespace tconn
