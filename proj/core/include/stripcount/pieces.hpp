#pragma once

#include <vector>

#include "stripcount/chromatic.hpp"
#include "stripcount/gain_graph.hpp"
#include "stripcount/move_set.hpp"
#include "stripcount/plus_expression.hpp"
#include "stripcount/rational.hpp"

namespace stripcount {

/// m rows with occupancy[j] pieces required in row j.
struct BoardSpec {
  Int rows = 0;
  std::vector<Int> occupancy;

  /// Throws std::invalid_argument for rows < 1 or a bad occupancy vector.
  BoardSpec(Int rows, std::vector<Int> occupancy);
  static BoardSpec one_per_row(Int rows);

  /// q, the total number of pieces.
  Int pieces() const;
  /// q_1! q_2! ... q_m!
  Int labellings() const;
  bool at_most_one_per_row() const;

  bool operator==(const BoardSpec&) const = default;
};

/// Vertex index of slot `slot` in row `row` (both 0-based) in the graph
/// returned by build_gain_graph.
std::size_t piece_vertex(const BoardSpec& board, Int row, Int slot);

/// One zero-weight vertex per piece slot, ordered by row then slot. For
/// slots in rows i < i + k, one edge of gain dx per attack (dx, k); for two
/// slots of one row, one edge per horizontal attack (dx, 0).
/// Throws std::invalid_argument if ms is not symmetric and
/// IdenticallyZeroCount when an unbounded horizontal mover must share a row.
GainGraph build_gain_graph(const MoveSet& ms, const BoardSpec& board);

/// Labelled count as a positive-part expression plus the labelling divisor.
///
/// `symmetrized` is the sum over all within-row slot permutations sigma of
/// the labelled count with the slots of each cycle of sigma forced equal.
/// By Burnside's lemma it is divisor times the number of unlabelled
/// configurations. It equals `labelled` when (0,0) is an attack or every row
/// holds at most one piece, since then no two slots of a row may coincide.
struct CountFormula {
  PlusExpression labelled;
  Int divisor = 1;
  PlusExpression symmetrized;

  /// Unlabelled count at width n. Throws std::logic_error if the symmetrized
  /// count is not divisible.
  Int count(Int n) const;
};

CountFormula count_formula(const MoveSet& ms, const BoardSpec& board);
CountFormula count_formula(const MoveSet& ms, const BoardSpec& board, ChromaticEngine& engine);

/// a[i][j] for i < j: distinct dx with (dx, j - i) an attack, ignoring board
/// width. Entries with i >= j are zero.
std::vector<std::vector<Int>> attack_counts(const MoveSet& ms, const BoardSpec& board);

/// c1 = sum_i [ C(q_i, 2) + q_i sum_{j>i} q_j a_ij ], the magnitude of the
/// second coefficient of the labelled eventual polynomial.
/// Throws std::invalid_argument when some q_i >= 2 and (0,0) is not an
/// attack, or when the count is identically zero.
Int second_coefficient(const MoveSet& ms, const BoardSpec& board);

/// K with P(random placement is nonattacking) ~ 1 - K/n.
struct AsymptoticProbability {
  /// True when every row holds at most one piece; then K = c1.
  bool one_per_row = true;
  Int constant = 0;
};

/// For one piece per row K = c1; otherwise placements use distinct
/// positions within each row and K = sum_{i<j} q_i q_j a_ij.
/// Same preconditions as second_coefficient.
AsymptoticProbability asymptotic_probability(const MoveSet& ms, const BoardSpec& board);

/// (q - 1) * max |dx| over attacks (dx, k) with 0 <= k < m; k >= 1 when the
/// horizontal moves are unbounded or every row has at most one piece.
Int sufficient_width_bound(const MoveSet& ms, const BoardSpec& board);

/// b * floor((m^2 - 2) / 2), clamped at 0.
Int slope_threshold(Int b, Int m);

/// alpha^{-1} * floor((m^2 - 2) / 2), clamped at 0. Throws
/// std::invalid_argument unless alpha_inverse > 0.
Rational improved_bound(const Rational& alpha_inverse, Int m);

}  // namespace stripcount
