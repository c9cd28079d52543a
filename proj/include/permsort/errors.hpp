#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permsort {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed permutation, word, value set or name.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Pattern shape the requested operation does not handle (multi-bar, mesh
/// decoration, marks with a count above one in expansion, ...).
class UnsupportedPattern : public Error {
public:
  using Error::Error;
};

class InvalidInsertion : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class InvalidBound : public Error {
public:
  using Error::Error;
};

class UnsupportedFormat : public Error {
public:
  using Error::Error;
};

/// Syntax or semantic error in a textual pattern. `position` is a byte
/// offset into the input.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace permsort
