#pragma once

#include <stdexcept>
#include <string>

namespace episturm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (spinned words, permutations, substitution files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (alphabet mismatch,
/// non-episturmian input, violated precondition).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A checked invariant of an algorithm failed. Never expected; signals a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace episturm
