#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element does not match the signature of the algebra it was used with.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A literal is well-formed but names something the algebra does not have
/// (chain index out of range, `rad` on a product, ...).
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for this kind of algebra or filter.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency assertion failed. Seeing one of these means a
/// construction produced something that contradicts the theory it encodes.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Syntax error in one of the literal grammars.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace mvspec
