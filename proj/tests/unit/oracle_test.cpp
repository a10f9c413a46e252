#include <gtest/gtest.h>

#include "stripcount/errors.hpp"
#include "stripcount/oracle.hpp"

namespace stripcount {
namespace {

Int brute(const char* piece, BoardSpec board, Int n) { return brute_count(builtin(piece).moves, board, n); }

TEST(Oracle, SmallBoards) {
  EXPECT_EQ(brute("queen", BoardSpec::one_per_row(2), 3), 2);
  EXPECT_EQ(brute("queen", BoardSpec::one_per_row(3), 3), 0);
  EXPECT_EQ(brute("bishop", BoardSpec::one_per_row(2), 2), 2);
  EXPECT_EQ(brute("knight", BoardSpec::one_per_row(2), 3), 7);
}

TEST(Oracle, SingleRowCountsColumns) {
  for (const auto& name : builtin_names()) {
    for (Int n = 0; n <= 6; ++n) EXPECT_EQ(brute_count(builtin(name).moves, BoardSpec::one_per_row(1), n), n);
  }
}

TEST(Oracle, StackingAllowedWithoutOrigin) {
  EXPECT_EQ(brute("bishop", BoardSpec(1, {2}), 2), 3);
  EXPECT_EQ(brute_labelled_count(builtin("bishop").moves, BoardSpec(1, {2}), 2), 4);
}

TEST(Oracle, UnlabelledIsLabelledOverLabellings) {
  const MoveSet ms({{0, 0}, {1, 0}, {-1, 0}, {2, 1}, {-2, -1}, {-2, 1}, {2, -1}}, {}, false);
  const BoardSpec board(2, {3, 2});
  for (Int n = 0; n <= 7; ++n) EXPECT_EQ(brute_count(ms, board, n) * 12, brute_labelled_count(ms, board, n));
}

TEST(Oracle, OriginForbidsStacking) {
  const MoveSet ms({{0, 0}, {1, 1}, {-1, -1}}, {}, false);
  EXPECT_EQ(brute_count(ms, BoardSpec(1, {2}), 3), 3);
}

TEST(Oracle, EmptyBoardWidthZero) { EXPECT_EQ(brute("queen", BoardSpec::one_per_row(3), 0), 0); }

TEST(Oracle, NoPiecesMeansOneConfiguration) { EXPECT_EQ(brute("queen", BoardSpec(2, {0, 0}), 5), 1); }

TEST(Oracle, CapIsEnforced) {
  EXPECT_THROW(brute("knight", BoardSpec::one_per_row(8), 40), OracleCapExceeded);
  OracleOptions tight;
  tight.cap_bits = 4;
  EXPECT_THROW(brute_count(builtin("rook").moves, BoardSpec::one_per_row(2), 4, tight), OracleCapExceeded);
  tight.enforce_cap = false;
  EXPECT_EQ(brute_count(builtin("rook").moves, BoardSpec::one_per_row(2), 4, tight), 12);
}

}  // namespace
}  // namespace stripcount
