#pragma once

#include <filesystem>
#include <istream>

#include "stripcount/move_set.hpp"

namespace stripcount {

/// Line-oriented piece definition:
///
///   name: <identifier>
///   move: <dx> <dy>            repeatable
///   generator: <dx> <dy>       repeatable; all positive multiples
///   symmetric: true|false      default true (applies symmetric_closure)
///   horizontal: none|unbounded default none
///
/// Blank lines and lines starting with '#' are ignored. Unknown or repeated
/// single-valued keys are rejected with PieceFileError.
Piece parse_piece(std::istream& in);
Piece load_piece_file(const std::filesystem::path& path);

}  // namespace stripcount
