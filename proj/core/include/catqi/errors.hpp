#pragma once

#include <stdexcept>
#include <string>

namespace catqi {

/// Raised when an argument lies outside the mathematical domain of an operation
/// (negative k in a binomial, inverting zero, x > b for G_{a,b}, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised on API misuse that is not a domain question: mixing radicands,
/// argument vectors that are too short, malformed text input.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace catqi
