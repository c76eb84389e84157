#pragma once

#include <stdexcept>
#include <string>

namespace orthopat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed pattern, matrix or catalog text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// solve_exact was handed a singular coefficient matrix.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// A construction failed its own exact self-check, or a bounded retry loop
/// ran out of candidates.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Embedded or overridden catalog data does not match its checksum.
class CatalogError : public Error {
 public:
  using Error::Error;
};

}  // namespace orthopat
