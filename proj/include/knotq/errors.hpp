#pragma once

#include <stdexcept>
#include <string>

namespace knotq {

// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. pos is a 0-based character offset, or -1.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long pos = -1)
      : Error(pos < 0 ? what : what + " at position " + std::to_string(pos)), pos_(pos) {}
  long pos() const { return pos_; }

 private:
  long pos_;
};

// Precondition violated by the caller (bad index, mismatched sizes, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A documented size bound was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// The computation itself failed (vanishing quantum integer, non-unitary input, ...).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace knotq
