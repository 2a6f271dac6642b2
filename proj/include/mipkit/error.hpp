#pragma once

#include <stdexcept>
#include <string>

namespace mipkit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient spaces, groups or algebras.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A containment that an operation requires (U ⊆ V, N ⊴ G, ...) does not hold.
class NotContained : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (presentations, multiplication tables).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds the size caps of the dense representations.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A post-hoc verification failed. Signals a bug, never bad input.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

inline void verify(bool cond, const std::string& what) {
  if (!cond) throw VerificationFailure(what);
}

}  // namespace mipkit
