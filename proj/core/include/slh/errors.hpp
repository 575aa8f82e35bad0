#pragma once

#include <stdexcept>
#include <string>

namespace slh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a precondition (bad rank, bad range,
/// mismatched dimensions, unsupported kind).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A requested object would exceed a configured size limit.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A computed result failed a numerical validation check (positivity,
/// Hermiticity, unitarity, trace preservation).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Internal inconsistency in an irrep decomposition. Never recoverable.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

}  // namespace slh
