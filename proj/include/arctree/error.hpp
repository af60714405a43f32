#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arctree {

// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called on input that breaks its precondition
// (e.g. an invalid dependency tree handed to is_projective).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A projective-only operation received a non-projective tree.
class NonProjectiveError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A transition could not be applied. step() is the 1-based position of
// the offending action in its derivation.
class TransitionError : public Error {
 public:
  TransitionError(std::size_t step, const std::string& reason)
      : Error("step " + std::to_string(step) + ": " + reason), step_(step) {}

  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// An ordered tree violates anchoring, contiguity or canonical form.
class MalformedTreeError : public Error {
 public:
  using Error::Error;
};

// A textual input could not be parsed. position() is a byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& reason)
      : Error("offset " + std::to_string(position) + ": " + reason),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A value cannot be represented in an output format.
class FormatError : public Error {
 public:
  using Error::Error;
};

// An invariant that the library guarantees was found broken.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace arctree
