#pragma once

#include <stdexcept>
#include <string>

namespace pathlab {

/// A point was handed to an evaluator outside the entry's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A finite-difference stencil does not fit inside the domain.
class BoundaryError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A hypothesis of the requested check is violated (e.g. f'(x0) = 0).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Root finding, stencils or quadrature failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lookup of a catalog entry, curve or case by an id that is not registered.
class UnknownIdError : public std::out_of_range {
 public:
  explicit UnknownIdError(const std::string& id)
      : std::out_of_range("unknown id: " + id), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

}  // namespace pathlab
