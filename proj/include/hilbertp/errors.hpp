#pragma once

#include <stdexcept>
#include <string>

namespace hilbertp {

// Base of every error the library raises on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched probability spaces, dimensions or malformed containers.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// The operation needs a field (or sum) that is not identically zero.
class TrivialError : public Error {
 public:
  using Error::Error;
};

class UnsupportedExponentError : public Error {
 public:
  using Error::Error;
};

// Enumeration guards (2^k atoms, 2^|J| subsets).
class SizeError : public Error {
 public:
  using Error::Error;
};

// Constructor inputs that do not have the required shape (orthogonality, equal lengths).
class GeometryError : public Error {
 public:
  using Error::Error;
};

// A lemma hypothesis failed; the message names the failing equality.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace hilbertp
