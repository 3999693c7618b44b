#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fhorder {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex index outside 0..n-1.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An operation would produce or requires a graph of unsupported size.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Mismatched mapping arity or language.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The input violates a documented precondition (e.g. not point-determining).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive sweep would exceed its configured bound.
class CostGuardError : public Error {
 public:
  using Error::Error;
};

/// Relational symbols of arity >= 3 are outside the proven gap criterion.
class UnsupportedArityError : public Error {
 public:
  using Error::Error;
};

/// A library invariant failed. Seeing one of these is a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

  /// 1-based; 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fhorder
