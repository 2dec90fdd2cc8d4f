#pragma once

#include <stdexcept>
#include <string>

namespace nilorb {

/// Raised when an input violates a mathematical precondition (an invalid
/// partition, an incomparable pair, an unknown orbit label, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace nilorb
