#include "stripcount/piece_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "stripcount/errors.hpp"

namespace stripcount {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return true;
}

Move parse_vector(const std::string& value, int line) {
  std::istringstream in(value);
  std::string a;
  std::string b;
  std::string extra;
  if (!(in >> a >> b) || (in >> extra)) throw PieceFileError(line, "expected two integers, got '" + value + "'");
  auto to_int = [&](const std::string& s) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw PieceFileError(line, "not an integer: '" + s + "'");
    return v;
  };
  return Move{to_int(a), to_int(b)};
}

}  // namespace

Piece parse_piece(std::istream& in) {
  std::optional<std::string> name;
  std::optional<bool> symmetric;
  std::optional<bool> unbounded;
  std::set<Move> moves;
  std::set<Move> generators;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw PieceFileError(line, "expected 'key: value'");
    const std::string key = trim(std::string_view(text).substr(0, colon));
    const std::string value = trim(std::string_view(text).substr(colon + 1));

    if (key == "name") {
      if (name) throw PieceFileError(line, "duplicate name");
      if (!is_identifier(value)) throw PieceFileError(line, "invalid name '" + value + "'");
      name = value;
    } else if (key == "move") {
      moves.insert(parse_vector(value, line));
    } else if (key == "generator") {
      const Move g = parse_vector(value, line);
      if (g.dy == 0) throw PieceFileError(line, "generator must have nonzero dy");
      generators.insert(g);
    } else if (key == "symmetric") {
      if (symmetric) throw PieceFileError(line, "duplicate symmetric");
      if (value == "true") symmetric = true;
      else if (value == "false") symmetric = false;
      else throw PieceFileError(line, "symmetric must be true or false");
    } else if (key == "horizontal") {
      if (unbounded) throw PieceFileError(line, "duplicate horizontal");
      if (value == "none") unbounded = false;
      else if (value == "unbounded") unbounded = true;
      else throw PieceFileError(line, "horizontal must be none or unbounded");
    } else {
      throw PieceFileError(line, "unknown key '" + key + "'");
    }
  }
  if (!name) throw PieceFileError(line, "missing name");

  MoveSet ms(std::move(moves), std::move(generators), unbounded.value_or(false));
  if (symmetric.value_or(true)) ms = symmetric_closure(ms);
  return Piece{*name, std::move(ms), std::nullopt};
}

Piece load_piece_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open piece file '" + path.string() + "'");
  return parse_piece(in);
}

}  // namespace stripcount
