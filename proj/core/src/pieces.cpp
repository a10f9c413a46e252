#include "stripcount/pieces.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "stripcount/errors.hpp"

namespace stripcount {

BoardSpec::BoardSpec(Int rows_, std::vector<Int> occupancy_) : rows(rows_), occupancy(std::move(occupancy_)) {
  if (rows < 1) throw std::invalid_argument("board needs at least one row");
  if (static_cast<Int>(occupancy.size()) != rows) {
    throw std::invalid_argument("occupancy has " + std::to_string(occupancy.size()) + " entries for " +
                                std::to_string(rows) + " rows");
  }
  if (std::any_of(occupancy.begin(), occupancy.end(), [](Int q) { return q < 0; })) {
    throw std::invalid_argument("occupancy entries must be nonnegative");
  }
}

BoardSpec BoardSpec::one_per_row(Int rows) {
  if (rows < 1) throw std::invalid_argument("board needs at least one row");
  return BoardSpec(rows, std::vector<Int>(static_cast<std::size_t>(rows), 1));
}

Int BoardSpec::pieces() const { return std::accumulate(occupancy.begin(), occupancy.end(), Int{0}); }

Int BoardSpec::labellings() const {
  Int d = 1;
  for (Int q : occupancy) d = checked_mul(d, factorial(q));
  return d;
}

bool BoardSpec::at_most_one_per_row() const {
  return std::all_of(occupancy.begin(), occupancy.end(), [](Int q) { return q <= 1; });
}

std::size_t piece_vertex(const BoardSpec& board, Int row, Int slot) {
  Int index = 0;
  for (Int r = 0; r < row; ++r) index += board.occupancy[static_cast<std::size_t>(r)];
  return static_cast<std::size_t>(index + slot);
}

GainGraph build_gain_graph(const MoveSet& ms, const BoardSpec& board) {
  if (!ms.is_symmetric()) throw std::invalid_argument("move set is not centrally symmetric");
  if (ms.horizontal_unbounded() && !board.at_most_one_per_row()) {
    throw IdenticallyZeroCount("unbounded horizontal moves with two pieces in a row: no configuration exists");
  }

  const std::size_t m = static_cast<std::size_t>(board.rows);
  const auto attacks = ms.expand(board.rows);
  std::set<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    const Int qi = board.occupancy[i];
    // Within row i.
    for (Int r = 0; r < qi; ++r) {
      for (Int s = r + 1; s < qi; ++s) {
        for (const auto& a : attacks) {
          if (a.dy != 0) continue;
          edges.insert(Edge{piece_vertex(board, static_cast<Int>(i), r),
                            piece_vertex(board, static_cast<Int>(i), s), a.dx});
        }
      }
    }
    // Row i against the rows above it.
    for (std::size_t j = i + 1; j < m; ++j) {
      const Int k = static_cast<Int>(j - i);
      for (const auto& a : attacks) {
        if (a.dy != k) continue;
        for (Int r = 0; r < qi; ++r) {
          for (Int s = 0; s < board.occupancy[j]; ++s) {
            edges.insert(Edge{piece_vertex(board, static_cast<Int>(i), r),
                              piece_vertex(board, static_cast<Int>(j), s), a.dx});
          }
        }
      }
    }
  }
  return GainGraph(std::vector<Int>(static_cast<std::size_t>(board.pieces()), 0),
                   std::vector<Edge>(edges.begin(), edges.end()));
}

Int CountFormula::count(Int n) const {
  const Int total = evaluate(symmetrized, n);
  if (total % divisor != 0) {
    throw std::logic_error("symmetrized count " + std::to_string(total) + " not divisible by " +
                           std::to_string(divisor));
  }
  return total / divisor;
}

namespace {

// Merges every vertex into its representative; edges inside a class become
// loops. Weights of a class take their maximum.
GainGraph identify_vertices(const GainGraph& g, const std::vector<std::size_t>& rep) {
  std::vector<std::size_t> index(g.vertex_count());
  std::vector<Int> weights;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (rep[v] == v) {
      index[v] = weights.size();
      weights.push_back(g.weight(v));
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    Int& w = weights[index[rep[v]]];
    w = std::max(w, g.weight(v));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(Edge{index[rep[e.u]], index[rep[e.v]], e.gain});
  return GainGraph(std::move(weights), std::move(edges));
}

// Sum over permutations of the slots of rows [row, m) of chi with cycles
// identified. `rep` already describes rows before `row`.
PlusExpression permutation_sum(const GainGraph& g, const BoardSpec& board, std::size_t row,
                               std::vector<std::size_t>& rep, ChromaticEngine& engine) {
  if (row == board.occupancy.size()) return engine.compute(identify_vertices(g, rep));
  const Int q = board.occupancy[row];
  const std::size_t first = piece_vertex(board, static_cast<Int>(row), 0);
  std::vector<std::size_t> perm(static_cast<std::size_t>(q));
  std::iota(perm.begin(), perm.end(), 0);
  PlusExpression total;
  do {
    // Each slot maps to the smallest slot of its cycle.
    for (std::size_t s = 0; s < perm.size(); ++s) {
      std::size_t least = s;
      for (std::size_t t = perm[s]; t != s; t = perm[t]) least = std::min(least, t);
      rep[first + s] = first + least;
    }
    total = total + permutation_sum(g, board, row + 1, rep, engine);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

CountFormula count_formula(const MoveSet& ms, const BoardSpec& board, ChromaticEngine& engine) {
  const GainGraph g = build_gain_graph(ms, board);
  CountFormula f{engine.compute(g), board.labellings(), {}};
  if (board.at_most_one_per_row() || ms.contains_origin()) {
    f.symmetrized = f.labelled;
  } else {
    std::vector<std::size_t> rep(g.vertex_count());
    std::iota(rep.begin(), rep.end(), 0);
    f.symmetrized = permutation_sum(g, board, 0, rep, engine);
  }
  return f;
}

CountFormula count_formula(const MoveSet& ms, const BoardSpec& board) {
  ChromaticEngine engine;
  return count_formula(ms, board, engine);
}

std::vector<std::vector<Int>> attack_counts(const MoveSet& ms, const BoardSpec& board) {
  const auto m = static_cast<std::size_t>(board.rows);
  std::vector<std::vector<Int>> a(m, std::vector<Int>(m, 0));
  const auto attacks = ms.expand(board.rows);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Int k = static_cast<Int>(j - i);
      // expand() yields a set, so each dx is counted once.
      a[i][j] = static_cast<Int>(
          std::count_if(attacks.begin(), attacks.end(), [k](const Move& mv) { return mv.dy == k; }));
    }
  }
  return a;
}

namespace {

void require_second_term_hypotheses(const MoveSet& ms, const BoardSpec& board) {
  if (board.at_most_one_per_row()) return;
  if (ms.horizontal_unbounded()) {
    throw std::invalid_argument("count is identically zero for two pieces in a row with unbounded horizontal moves");
  }
  if (!ms.contains_origin()) {
    throw std::invalid_argument("rows with several pieces require (0,0) to be an attack");
  }
}

Int cross_row_pairs(const MoveSet& ms, const BoardSpec& board) {
  const auto a = attack_counts(ms, board);
  Int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      total = checked_add(total, checked_mul(checked_mul(board.occupancy[i], board.occupancy[j]), a[i][j]));
    }
  }
  return total;
}

}  // namespace

Int second_coefficient(const MoveSet& ms, const BoardSpec& board) {
  require_second_term_hypotheses(ms, board);
  Int c1 = cross_row_pairs(ms, board);
  for (Int q : board.occupancy) c1 = checked_add(c1, binomial(q, 2));
  return c1;
}

AsymptoticProbability asymptotic_probability(const MoveSet& ms, const BoardSpec& board) {
  require_second_term_hypotheses(ms, board);
  return AsymptoticProbability{board.at_most_one_per_row(), cross_row_pairs(ms, board)};
}

Int sufficient_width_bound(const MoveSet& ms, const BoardSpec& board) {
  const Int q = board.pieces();
  if (q <= 1) return 0;
  const Int min_k = (ms.horizontal_unbounded() || board.at_most_one_per_row()) ? 1 : 0;
  Int widest = 0;
  for (const auto& a : ms.expand(board.rows)) {
    if (a.dy < min_k) continue;
    widest = std::max(widest, a.dx < 0 ? -a.dx : a.dx);
  }
  return checked_mul(q - 1, widest);
}

namespace {

Int half_floor(Int m) {
  const Int x = checked_sub(checked_mul(m, m), 2);
  // floor division for x >= -2
  return x >= 0 ? x / 2 : -1;
}

}  // namespace

Int slope_threshold(Int b, Int m) { return std::max<Int>(0, checked_mul(b, half_floor(m))); }

Rational improved_bound(const Rational& alpha_inverse, Int m) {
  if (alpha_inverse <= Rational(0)) throw std::invalid_argument("alpha must be positive");
  const Rational bound = alpha_inverse * Rational(half_floor(m));
  return bound < Rational(0) ? Rational(0) : bound;
}

}  // namespace stripcount
