#pragma once

#include <stdexcept>
#include <string>

namespace seqeff {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different algebras.
class DescriptorMismatch : public Error {
 public:
  using Error::Error;
};

// The requested operation is not defined for this algebra / product pairing.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A function passed to the functional calculus is undefined on the spectrum.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace seqeff
