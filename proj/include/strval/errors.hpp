#pragma once

#include <stdexcept>
#include <string>

namespace strval {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported root system family/rank or a size cap exceeded.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Invalid input: malformed word, non-dominant weight, zero vector where a nonzero one is required.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed run configuration (unknown key, wrong type, invalid family/rank/word/weight).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A computation contradicted a structural guarantee (leaf separation, span membership,
/// additivity). These indicate a falsified mathematical contract, never bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace strval
