#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gencol {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller-supplied arguments (out-of-range vertex, loop edge, bad generator parameters).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position` is a byte offset or a 1-based line
/// number depending on the format; the message says which.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An exhaustive procedure was asked to run beyond its size gate.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Algorithm A cannot run because a clique or co-clique bound probe came back unbounded.
class InapplicableError : public Error {
 public:
  using Error::Error;
};

}  // namespace gencol
