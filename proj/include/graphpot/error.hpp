#pragma once

#include <stdexcept>
#include <string>

namespace graphpot {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph violates one of the trivalent-graph invariants.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedMoveError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphpot
