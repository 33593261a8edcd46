#pragma once

#include <stdexcept>
#include <string>

namespace trigsum {

/// Argument lies outside the principal domain of a closed form.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Negative exponent evaluated where cos(phi/2) vanishes.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by summation methods that detect an unbounded series.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency check failed (a bug, not bad input).
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace trigsum
