#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starlab {

/// Categories map one-to-one onto the CLI exit codes (see tools/starlab.cpp).
enum class ErrorKind {
  SpecTooLarge,
  MalformedSpec,
  NotAnIdeal,
  NotIdempotent,
  NotAProjection,
  AxiomViolation,
  IdentityOnNoncommutative,
  SwapShapeMismatch,
  NotStarInvariant,
  ParseError,
  ValidationError,
  UnknownProperty,
  IllConditioned,
  MalformedMatrix,
  IoError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the DSL parsers; `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorKind::ParseError, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace starlab
