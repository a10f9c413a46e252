#include <gtest/gtest.h>

#include <array>

#include "stripcount/chromatic.hpp"

namespace stripcount {
namespace {

const PlusExpression kQueens2({{1, {0, 0}}, {-1, {0}}, {-2, {1}}});
const PlusExpression kBishops2({{1, {0, 0}}, {-2, {1}}});

TEST(IntegralChromatic, QueensPair) {
  EXPECT_EQ(integral_chromatic(GainGraph({0, 0}, {{0, 1, 0}, {0, 1, 1}, {0, 1, -1}})), kQueens2);
}

TEST(IntegralChromatic, WeightedVertexWithLoop) {
  EXPECT_EQ(integral_chromatic(GainGraph({2}, {{0, 0, 5}})), PlusExpression::term(1, {2}));
}

TEST(IntegralChromatic, ZeroLoopKillsEverything) {
  const GainGraph g({0, 0, 0}, {{0, 1, 1}, {1, 2, -1}, {2, 2, 0}});
  EXPECT_TRUE(integral_chromatic(g).is_zero());
}

TEST(IntegralChromatic, EdgelessGraphIsProduct) {
  EXPECT_EQ(integral_chromatic(GainGraph({0, 1, 3}, {})), PlusExpression::term(1, {0, 1, 3}));
}

TEST(IntegralChromatic, GenericRecursionMatchesShortcut) {
  ChromaticOptions plain;
  plain.two_vertex_shortcut = false;
  plain.memoize = false;
  ChromaticEngine engine(plain);
  EXPECT_EQ(engine.compute(GainGraph({0, 0}, {{0, 1, 0}, {0, 1, 1}, {0, 1, -1}})), kQueens2);
  EXPECT_EQ(engine.compute(GainGraph({0, 0}, {{0, 1, 1}, {0, 1, -1}})), kBishops2);
}

TEST(IntegralChromatic, ParallelModeAgrees) {
  const GainGraph g({0, 0, 0, 0}, {{0, 1, 2}, {0, 1, -2}, {1, 2, 2}, {1, 2, -2}, {2, 3, 2}, {2, 3, -2},
                                   {0, 2, 1}, {0, 2, -1}, {1, 3, 1}, {1, 3, -1}});
  ChromaticOptions par;
  par.parallel = true;
  ChromaticEngine engine(par);
  EXPECT_EQ(engine.compute(g), integral_chromatic(g));
}

TEST(IntegralChromatic, CacheIsPopulated) {
  ChromaticEngine engine;
  engine.compute(GainGraph({0, 0, 0}, {{0, 1, 1}, {0, 1, -1}, {1, 2, 1}, {1, 2, -1}, {0, 2, 2}, {0, 2, -2}}));
  EXPECT_GT(engine.cache_size(), 0u);
}

TEST(MultipleEdge, BishopsPair) {
  const std::array<Int, 2> g{-1, 1};
  EXPECT_EQ(multiple_edge_chromatic(0, 0, g), kBishops2);
}

TEST(MultipleEdge, QueensPair) {
  const std::array<Int, 3> g{0, 1, -1};
  EXPECT_EQ(multiple_edge_chromatic(0, 0, g), kQueens2);
}

TEST(MultipleEdge, NoGainsIsFreeSquare) {
  EXPECT_EQ(multiple_edge_chromatic(0, 0, {}), PlusExpression::term(1, {0, 0}));
}

TEST(MultipleEdge, RejectsRepeatedGain) {
  const std::array<Int, 2> g{1, 1};
  EXPECT_THROW(multiple_edge_chromatic(0, 0, g), std::invalid_argument);
}

TEST(DeletionContraction, QueensZeroEdge) {
  EXPECT_TRUE(verify_dc_identity(GainGraph({0, 0}, {{0, 1, 0}, {0, 1, 1}, {0, 1, -1}}), 0, 10));
}

TEST(DeletionContraction, BishopsPositiveEdge) {
  const GainGraph b({0, 0}, {{0, 1, 1}, {0, 1, -1}});
  const std::size_t e = b.edge(0).gain == 1 ? 0 : 1;
  EXPECT_TRUE(verify_dc_identity(b, e, 10));
}

TEST(DeletionContraction, LinklessGraphIsRejected) {
  EXPECT_THROW(verify_dc_identity(GainGraph({0}, {{0, 0, 1}}), 0, 5), std::invalid_argument);
}

TEST(SmallestLink, SkipsLoops) {
  const GainGraph g({0, 0}, {{0, 0, 3}, {0, 1, -2}, {0, 1, 1}});
  EXPECT_EQ(g.edge(smallest_link(g)), (Edge{0, 1, 1}));
}

TEST(CanonicalForm, RelabelledGraphsShareKey) {
  const GainGraph a({0, 1, 0}, {{0, 1, 2}, {1, 2, -1}});
  const GainGraph b({1, 0, 0}, {{0, 1, -2}, {0, 2, -1}});
  // b is a with vertices 0 and 1 swapped.
  EXPECT_EQ(canonical_form(a).key, canonical_form(b).key);
}

TEST(CanonicalForm, DifferentGainsDiffer) {
  const GainGraph a({0, 0}, {{0, 1, 2}});
  const GainGraph b({0, 0}, {{0, 1, 3}});
  EXPECT_NE(canonical_form(a).key, canonical_form(b).key);
}

}  // namespace
}  // namespace stripcount
