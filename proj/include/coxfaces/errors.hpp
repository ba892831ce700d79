#pragma once

#include <stdexcept>
#include <string>

namespace coxfaces {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The type string does not name a supported finite Coxeter type.
class UnsupportedType : public Error {
 public:
  using Error::Error;
};

/// The requested root coordinates need a coefficient ring we cannot represent exactly.
class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; this signals a bug, not bad input.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

/// An operation needs to materialize more elements than the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace coxfaces
