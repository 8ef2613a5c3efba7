#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace clhopf {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Raised when a quotient that must be exact (Bareiss steps, T = mu*S) is not.
struct InexactDivision : std::domain_error {
  using std::domain_error::domain_error;
};

struct MissingVariable : std::invalid_argument {
  explicit MissingVariable(std::vector<std::string> missing);
  std::vector<std::string> names;
};

}  // namespace clhopf
