#pragma once

#include <stdexcept>

namespace arfspin {

/// An argument violates the precondition of the operation it was passed to.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is meaningful but outside what the library handles
/// (genus below 2, levels of elliptic elements, ...).
class OutOfScopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Branch continuation in the covering group left a residual above tolerance.
class BranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace arfspin
