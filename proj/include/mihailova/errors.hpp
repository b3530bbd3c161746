#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mihailova {

// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Letter outside the alphabet, or operands over different alphabets.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

class UndefinedRootError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a partial map (e.g. capitalizing a t-letter).
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A Peiffer move requested at a position where it does not apply.
class InapplicableMoveError : public Error {
 public:
  using Error::Error;
};

// Raised when a proof step's hypothesis fails on concrete data, e.g. the
// middle syllable of a deletable pair is not a power of the relator root.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  // 1-based line number, or 0 when the input was not line-oriented.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mihailova
