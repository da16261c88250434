#pragma once

#include <stdexcept>
#include <string>

namespace stable_core {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed line in an instance or matching file.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A preference list or assignment contains a duplicate or is missing an id.
class NotAPermutation : public Error {
 public:
  using Error::Error;
};

/// A list length, or a number of lists, disagrees with the market size.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked for a size beyond its guard.
class SizeTooLarge : public Error {
 public:
  using Error::Error;
};

class IdOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Query on a vertex that is no longer alive in the digraph.
class VertexDeleted : public Error {
 public:
  using Error::Error;
};

/// Reduction pivot whose out-degree on the requested axis is not zero.
class InvalidPivot : public Error {
 public:
  using Error::Error;
};

/// A structural property of normal forms failed to hold. Only an
/// implementation bug can raise this.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace stable_core
