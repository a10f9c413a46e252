#include <gtest/gtest.h>

#include "stripcount/gain_graph.hpp"

namespace stripcount {
namespace {

GainGraph queens2() { return GainGraph({0, 0}, {{0, 1, 0}, {0, 1, 1}, {0, 1, -1}}); }
GainGraph bishops2() { return GainGraph({0, 0}, {{0, 1, 1}, {0, 1, -1}}); }

std::vector<Int> gains(const GainGraph& g) {
  std::vector<Int> out;
  for (const auto& e : g.edges()) out.push_back(e.gain);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(GainGraph, ConstructsQueensPair) {
  const GainGraph g = queens2();
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.link_count(), 3u);
  EXPECT_EQ(gains(g), (std::vector<Int>{-1, 0, 1}));
}

TEST(GainGraph, IsolatedVertexHasNoLinks) {
  const GainGraph g({0}, {});
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_FALSE(g.has_links());
}

TEST(GainGraph, ReversedEdgeIsStoredWithNegatedGain) {
  const GainGraph g({0, 0}, {{1, 0, 1}});
  EXPECT_EQ(g.edge(0), (Edge{0, 1, -1}));
}

TEST(GainGraph, RejectsBadEndpoint) { EXPECT_THROW(GainGraph({0}, {{0, 1, 0}}), std::out_of_range); }

TEST(Switching, MovesGainsAndWeights) {
  const GainGraph s = switch_graph(bishops2(), SwitchingFunction{{1, 0}});
  EXPECT_EQ(s.weights()[0], 1);
  EXPECT_EQ(s.weights()[1], 0);
  EXPECT_EQ(gains(s), (std::vector<Int>{-2, 0}));
}

TEST(Switching, ZeroFunctionIsIdentity) {
  EXPECT_EQ(switch_graph(queens2(), SwitchingFunction{{0, 0}}), queens2());
}

TEST(Switching, ShiftsSingleWeight) {
  const GainGraph s = switch_graph(GainGraph({3}, {}), SwitchingFunction{{-3}});
  EXPECT_EQ(s.weight(0), 0);
}

TEST(Deletion, QueensMinusZeroEdgeIsBishops) {
  EXPECT_EQ(delete_edge(queens2(), 0), bishops2());
}

TEST(Deletion, LastEdgeLeavesIsolatedVertices) {
  const GainGraph g = delete_edge(GainGraph({0, 0}, {{0, 1, 4}}), 0);
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Deletion, ParallelCopySurvives) {
  const GainGraph g = delete_edge(GainGraph({0, 0}, {{0, 1, 1}, {0, 1, 1}}), 0);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1, 1}));
}

TEST(Contraction, BishopsPositiveEdge) {
  const GainGraph b = bishops2();
  const auto pos = static_cast<std::size_t>(b.edge(0).gain == 1 ? 0 : 1);
  const GainGraph c = contract_edge(b, pos);
  ASSERT_EQ(c.vertex_count(), 1u);
  EXPECT_EQ(c.weight(0), 1);
  ASSERT_EQ(c.edge_count(), 1u);
  EXPECT_TRUE(c.edge(0).is_loop());
  EXPECT_EQ(std::abs(c.edge(0).gain), 2);
}

TEST(Contraction, QueensZeroEdgeLeavesUnitLoops) {
  const GainGraph c = contract_edge(queens2(), 0);
  ASSERT_EQ(c.vertex_count(), 1u);
  EXPECT_EQ(c.weight(0), 0);
  EXPECT_EQ(c.edge_count(), 2u);
  for (const auto& e : c.edges()) {
    EXPECT_TRUE(e.is_loop());
    EXPECT_EQ(std::abs(e.gain), 1);
  }
}

TEST(Contraction, NegativeGainFlipsBeforeSwitching) {
  const GainGraph c = contract_edge(GainGraph({0, 0}, {{0, 1, -2}}), 0);
  ASSERT_EQ(c.vertex_count(), 1u);
  EXPECT_EQ(c.weight(0), 2);
}

TEST(Contraction, RejectsLoop) {
  EXPECT_THROW(contract_edge(GainGraph({0}, {{0, 0, 1}}), 0), std::invalid_argument);
}

TEST(Simplify, DropsNonzeroLoops) {
  const auto r = simplify(GainGraph({0}, {{0, 0, -2}, {0, 0, 3}}));
  EXPECT_FALSE(r.has_zero_loop);
  EXPECT_EQ(r.graph.edge_count(), 0u);
  EXPECT_EQ(r.graph.vertex_count(), 1u);
}

TEST(Simplify, FlagsZeroLoop) {
  const auto r = simplify(GainGraph({0}, {{0, 0, 0}}));
  EXPECT_TRUE(r.has_zero_loop);
  EXPECT_EQ(r.graph.edge_count(), 0u);
}

TEST(Simplify, MergesEqualParallelLinks) {
  const auto r = simplify(GainGraph({0, 0}, {{0, 1, 1}, {0, 1, 1}, {0, 1, -1}}));
  EXPECT_FALSE(r.has_zero_loop);
  EXPECT_EQ(gains(r.graph), (std::vector<Int>{-1, 1}));
}

TEST(Components, SplitsIsolatedVertices) {
  const auto parts = components(GainGraph({0, 0}, {}));
  EXPECT_EQ(parts.size(), 2u);
}

TEST(Components, ConnectedGraphIsOnePiece) { EXPECT_EQ(components(queens2()).size(), 1u); }

TEST(Components, KeepsWeightsOfSeparatedVertex) {
  const auto parts = components(GainGraph({0, 0, 2}, {{0, 1, 0}, {0, 1, 1}, {0, 1, -1}}));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].vertex_count() + parts[1].vertex_count(), 3u);
  const auto& lone = parts[0].vertex_count() == 1 ? parts[0] : parts[1];
  EXPECT_EQ(lone.weight(0), 2);
}

TEST(MaxPathGain, SingleVertexIsZero) { EXPECT_EQ(max_path_gain(GainGraph({0}, {})), 0); }

TEST(MaxPathGain, QueensOnThreeRows) {
  const GainGraph q3({0, 0, 0}, {{0, 1, 0}, {0, 1, 1}, {0, 1, -1}, {1, 2, 0}, {1, 2, 1}, {1, 2, -1},
                                 {0, 2, 0}, {0, 2, 2}, {0, 2, -2}});
  EXPECT_EQ(max_path_gain(q3), 3);
}

}  // namespace
}  // namespace stripcount
