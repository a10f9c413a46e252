#pragma once

#include <stdexcept>
#include <string>

namespace stripcount {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a board admits no nonattacking configuration for any width,
/// e.g. two pieces in a row for a piece with unbounded horizontal moves.
class IdenticallyZeroCount : public Error {
 public:
  using Error::Error;
};

class OracleCapExceeded : public Error {
 public:
  using Error::Error;
};

class PieceFileError : public Error {
 public:
  PieceFileError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace stripcount
