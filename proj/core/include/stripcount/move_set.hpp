#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stripcount/integer.hpp"

namespace stripcount {

/// Attack displacement: dx columns, dy rows.
struct Move {
  Int dx = 0;
  Int dy = 0;

  Move operator-() const { return Move{-dx, -dy}; }
  auto operator<=>(const Move&) const = default;
};

/// A piece's attack set A_P.
///
/// Explicit moves are single displacements. Generators stand for every
/// positive multiple of a vector (line pieces); they must have dy != 0 and
/// are expanded only up to the board height. `horizontal_unbounded` means
/// every (dx, 0) is an attack, in which case no explicit horizontal moves
/// are stored.
class MoveSet {
 public:
  MoveSet() = default;
  /// Throws std::invalid_argument for a generator with dy == 0.
  MoveSet(std::set<Move> moves, std::set<Move> generators, bool horizontal_unbounded);

  const std::set<Move>& moves() const noexcept { return moves_; }
  const std::set<Move>& generators() const noexcept { return generators_; }
  bool horizontal_unbounded() const noexcept { return horizontal_unbounded_; }

  /// Direct membership test of (dx, dy) in A_P.
  bool attacks(Int dx, Int dy) const;
  /// Every attack with |dy| < rows, horizontal ones included only when the
  /// horizontal set is finite.
  std::set<Move> expand(Int rows) const;

  bool is_symmetric() const;
  bool contains_origin() const { return attacks(0, 0); }

  bool operator==(const MoveSet&) const = default;

 private:
  bool generated(Int dx, Int dy) const;

  std::set<Move> moves_;
  std::set<Move> generators_;
  bool horizontal_unbounded_ = false;
};

/// A_P union -A_P (moves and generators). Idempotent.
MoveSet symmetric_closure(const MoveSet& ms);

/// A named piece. `slope` is set to b when every nonhorizontal move has
/// |dx| <= b|dy| and every (+-b*k, k) is a move. With one piece per row
/// their gain graph has largest path gain exactly b*floor((m^2-2)/2).
struct Piece {
  std::string name;
  MoveSet moves;
  std::optional<Int> slope;
};

/// rook, bishop, queen, knight, nightrider. Throws std::invalid_argument
/// for anything else.
Piece builtin(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace stripcount
