#include "stripcount/oracle.hpp"

#include <stdexcept>
#include <string>

#include "stripcount/errors.hpp"

namespace stripcount {

namespace {

class Enumerator {
 public:
  // With `sorted`, slots of one row take nondecreasing columns, so each
  // unlabelled configuration is visited once.
  Enumerator(const MoveSet& ms, const BoardSpec& board, Int n, bool sorted) : ms_(ms), n_(n), sorted_(sorted) {
    for (Int row = 0; row < board.rows; ++row) {
      for (Int r = 0; r < board.occupancy[static_cast<std::size_t>(row)]; ++r) rows_.push_back(row);
    }
    columns_.resize(rows_.size());
  }

  Int run() { return place(0); }

 private:
  // Pieces are placed in row order, so an earlier piece is never in a
  // higher row than a later one.
  bool compatible(std::size_t placed, Int column) const {
    const Int row = rows_[placed];
    for (std::size_t p = 0; p < placed; ++p) {
      if (ms_.attacks(column - columns_[p], row - rows_[p])) return false;
    }
    return true;
  }

  Int place(std::size_t index) {
    if (index == rows_.size()) return 1;
    Int total = 0;
    const bool follows = sorted_ && index > 0 && rows_[index - 1] == rows_[index];
    for (Int column = follows ? columns_[index - 1] : 1; column <= n_; ++column) {
      if (!compatible(index, column)) continue;
      columns_[index] = column;
      total = checked_add(total, place(index + 1));
    }
    return total;
  }

  const MoveSet& ms_;
  Int n_;
  bool sorted_;
  std::vector<Int> rows_;
  std::vector<Int> columns_;
};

}  // namespace

void check_oracle_cap(const BoardSpec& board, Int n, const OracleOptions& options) {
  if (!options.enforce_cap) return;
  const Int limit = Int{1} << options.cap_bits;
  Int space = 1;
  for (Int i = 0; i < board.pieces(); ++i) {
    if (__builtin_mul_overflow(space, n + 1, &space) || space > limit) {
      throw OracleCapExceeded("brute force over " + std::to_string(board.pieces()) + " pieces at width " +
                              std::to_string(n) + " exceeds 2^" + std::to_string(options.cap_bits) +
                              " placements");
    }
  }
}

Int brute_labelled_count(const MoveSet& ms, const BoardSpec& board, Int n, const OracleOptions& options) {
  if (n < 0) throw std::invalid_argument("width must be nonnegative");
  check_oracle_cap(board, n, options);
  return Enumerator(ms, board, n, false).run();
}

Int brute_count(const MoveSet& ms, const BoardSpec& board, Int n, const OracleOptions& options) {
  if (n < 0) throw std::invalid_argument("width must be nonnegative");
  check_oracle_cap(board, n, options);
  return Enumerator(ms, board, n, true).run();
}

}  // namespace stripcount
