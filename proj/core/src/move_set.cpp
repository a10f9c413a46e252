#include "stripcount/move_set.hpp"

#include <stdexcept>

namespace stripcount {

MoveSet::MoveSet(std::set<Move> moves, std::set<Move> generators, bool horizontal_unbounded)
    : moves_(std::move(moves)), generators_(std::move(generators)), horizontal_unbounded_(horizontal_unbounded) {
  for (const auto& g : generators_) {
    if (g.dy == 0) {
      throw std::invalid_argument("generator (" + std::to_string(g.dx) + ", 0) is horizontal; use "
                                  "horizontal: unbounded or explicit moves");
    }
  }
  if (horizontal_unbounded_) std::erase_if(moves_, [](const Move& m) { return m.dy == 0; });
}

bool MoveSet::generated(Int dx, Int dy) const {
  for (const auto& g : generators_) {
    // (dx, dy) = j * g for some integer j >= 1.
    if (dy % g.dy != 0) continue;
    const Int j = dy / g.dy;
    if (j >= 1 && checked_mul(j, g.dx) == dx) return true;
  }
  return false;
}

bool MoveSet::attacks(Int dx, Int dy) const {
  if (dy == 0 && horizontal_unbounded_) return true;
  if (moves_.contains(Move{dx, dy})) return true;
  return dy != 0 && generated(dx, dy);
}

std::set<Move> MoveSet::expand(Int rows) const {
  std::set<Move> out;
  for (const auto& m : moves_) {
    const Int h = m.dy < 0 ? -m.dy : m.dy;
    if (h < rows) out.insert(m);
  }
  for (const auto& g : generators_) {
    const Int step = g.dy < 0 ? -g.dy : g.dy;
    for (Int j = 1; checked_mul(j, step) < rows; ++j) out.insert(Move{j * g.dx, j * g.dy});
  }
  return out;
}

bool MoveSet::is_symmetric() const {
  for (const auto& m : moves_) {
    if (!attacks(-m.dx, -m.dy)) return false;
  }
  for (const auto& g : generators_) {
    if (!generated(-g.dx, -g.dy)) return false;
  }
  return true;
}

MoveSet symmetric_closure(const MoveSet& ms) {
  std::set<Move> moves(ms.moves());
  for (const auto& m : ms.moves()) moves.insert(-m);
  std::set<Move> generators(ms.generators());
  for (const auto& g : ms.generators()) generators.insert(-g);
  return MoveSet(std::move(moves), std::move(generators), ms.horizontal_unbounded());
}

namespace {

std::set<Move> both_signs(std::initializer_list<Move> base) {
  std::set<Move> out;
  for (const auto& m : base) {
    out.insert(m);
    out.insert(-m);
  }
  return out;
}

}  // namespace

Piece builtin(std::string_view name) {
  const auto rook_lines = both_signs({{0, 1}});
  const auto diagonals = both_signs({{1, 1}, {-1, 1}});
  if (name == "rook") return Piece{"rook", MoveSet({}, rook_lines, true), std::nullopt};
  if (name == "bishop") return Piece{"bishop", MoveSet({}, diagonals, false), 1};
  if (name == "queen") {
    std::set<Move> lines(rook_lines);
    lines.insert(diagonals.begin(), diagonals.end());
    return Piece{"queen", MoveSet({}, lines, true), 1};
  }
  if (name == "knight") {
    return Piece{"knight", MoveSet(both_signs({{1, 2}, {-1, 2}, {2, 1}, {-2, 1}}), {}, false), std::nullopt};
  }
  if (name == "nightrider") {
    return Piece{"nightrider", MoveSet({}, both_signs({{1, 2}, {-1, 2}, {2, 1}, {-2, 1}}), false), 2};
  }
  throw std::invalid_argument("unknown piece '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() { return {"rook", "bishop", "queen", "knight", "nightrider"}; }

}  // namespace stripcount
