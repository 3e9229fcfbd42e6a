#pragma once

#include <stdexcept>
#include <string>

namespace arcwidom {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Contract violation: wrong chart, point outside the domain, invalid parameter.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A point that sits on a branch point, pole, or other excluded locus.
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Ill-conditioned systems, failed certificates, solver breakdown.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace arcwidom
