#pragma once

#include <stdexcept>
#include <string>

namespace lgq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

class ParamSetMismatch : public Error {
 public:
  using Error::Error;
};

class VarSetMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class PoleAtPoint : public Error {
 public:
  using Error::Error;
};

class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

/// Raised when a Gröbner, θ-degree or stabilization budget runs out. The CLI
/// maps it to exit status 2.
class ResourceBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotStabilized : public ResourceBudgetExceeded {
 public:
  using ResourceBudgetExceeded::ResourceBudgetExceeded;
};

/// Cofactors returned by a Gröbner lift did not reproduce the input.
class DivisionFailure : public Error {
 public:
  using Error::Error;
};

/// Some θ²∂θ image has θ-degree above one.
class NotBirkhoffForm : public Error {
 public:
  using Error::Error;
};

class OriginNotInVariety : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

/// A mathematical certificate did not hold. Carries a short tag naming the
/// failed check.
class VerificationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace lgq
