#include <gtest/gtest.h>

#include "stripcount/move_set.hpp"

namespace stripcount {
namespace {

TEST(SymmetricClosure, AddsNegatives) {
  const MoveSet ms({{1, 2}}, {}, false);
  const MoveSet closed = symmetric_closure(ms);
  EXPECT_EQ(closed.moves(), (std::set<Move>{{-1, -2}, {1, 2}}));
  EXPECT_FALSE(ms.is_symmetric());
  EXPECT_TRUE(closed.is_symmetric());
}

TEST(SymmetricClosure, Idempotent) {
  const MoveSet ms = symmetric_closure(MoveSet({{1, 2}, {3, 1}}, {{1, 1}}, false));
  EXPECT_EQ(symmetric_closure(ms), ms);
}

TEST(SymmetricClosure, OriginIsItsOwnNegative) {
  EXPECT_EQ(symmetric_closure(MoveSet({{0, 0}}, {}, false)).moves(), (std::set<Move>{{0, 0}}));
}

TEST(MoveSet, GeneratorNeedsVerticalComponent) {
  EXPECT_THROW(MoveSet({}, {{1, 0}}, false), std::invalid_argument);
}

TEST(MoveSet, UnboundedHorizontalDropsExplicitHorizontals) {
  const MoveSet ms({{3, 0}, {1, 1}}, {}, true);
  EXPECT_EQ(ms.moves(), (std::set<Move>{{1, 1}}));
  EXPECT_TRUE(ms.attacks(-57, 0));
}

TEST(MoveSet, GeneratorsCoverPositiveMultiples) {
  const Piece nr = builtin("nightrider");
  EXPECT_TRUE(nr.moves.attacks(3, 6));
  EXPECT_TRUE(nr.moves.attacks(-4, -2));
  EXPECT_FALSE(nr.moves.attacks(0, 0));
  EXPECT_FALSE(nr.moves.attacks(1, 1));
}

TEST(MoveSet, ExpandStopsAtBoardHeight) {
  const auto moves = builtin("bishop").moves.expand(3);
  for (const auto& m : moves) EXPECT_LT(std::abs(m.dy), 3);
  EXPECT_TRUE(moves.count(Move{2, 2}));
  EXPECT_FALSE(moves.count(Move{3, 3}));
}

TEST(Builtins, KnownNames) {
  for (const auto& name : builtin_names()) {
    const Piece p = builtin(name);
    EXPECT_EQ(p.name, name);
    EXPECT_TRUE(p.moves.is_symmetric());
    // Unbounded horizontal movers attack (0,0) along with every (dx,0).
    EXPECT_EQ(p.moves.contains_origin(), p.moves.horizontal_unbounded());
  }
  EXPECT_THROW(builtin("camel"), std::invalid_argument);
}

TEST(Builtins, SlopeParameters) {
  EXPECT_EQ(builtin("queen").slope, Int{1});
  EXPECT_EQ(builtin("bishop").slope, Int{1});
  EXPECT_EQ(builtin("nightrider").slope, Int{2});
  EXPECT_FALSE(builtin("knight").slope.has_value());
  EXPECT_FALSE(builtin("rook").slope.has_value());
}

}  // namespace
}  // namespace stripcount
