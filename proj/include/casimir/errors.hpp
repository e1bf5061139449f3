#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation not defined for the supplied material model.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite-difference steps too small to be meaningful.
class StepUnderflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least-squares fit cannot be carried out on the supplied grid.
class DegenerateGrid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace casimir
