// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conmat {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments was violated (out-of-range element,
// arity mismatch, unknown identifier, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exact evaluator refused to run because its explicit size guard was
// exceeded. Never silently approximated.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Matrix entries of incompatible kinds were combined.
class MixedKinds : public Error {
 public:
  using Error::Error;
};

// Syntax error in one of the text formats; carries the 0-based offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace conmat
