#pragma once

#include "stripcount/move_set.hpp"
#include "stripcount/pieces.hpp"

namespace stripcount {

struct OracleOptions {
  /// Refuse runs with (n+1)^q > 2^cap_bits, i.e. q*log2(n+1) > cap_bits.
  int cap_bits = 40;
  bool enforce_cap = true;
};

/// Throws OracleCapExceeded if width n is over the cap for this board.
void check_oracle_cap(const BoardSpec& board, Int n, const OracleOptions& options = {});

/// Number of labelled placements x_j^r in [1, n] with no attack: for rows
/// i < j, (x_j^s - x_i^r, j - i) is never an attack; within a row,
/// (x_j^s - x_j^r, 0) is never an attack for r < s. Queries the move set
/// directly and does not use the gain-graph construction.
/// Throws OracleCapExceeded when the search space is over the cap and
/// std::invalid_argument for n < 0.
Int brute_labelled_count(const MoveSet& ms, const BoardSpec& board, Int n, const OracleOptions& options = {});

/// Unlabelled configurations: the pieces of a row are interchangeable, so
/// each multiset of columns per row is counted once. Pieces may share a
/// square exactly when (0,0) is not an attack. When (0,0) is an attack, or
/// every row holds at most one piece, this is brute_labelled_count / prod q_j!.
Int brute_count(const MoveSet& ms, const BoardSpec& board, Int n, const OracleOptions& options = {});

}  // namespace stripcount
