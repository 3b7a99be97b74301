#pragma once

#include <stdexcept>
#include <string>

namespace capax {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Valid in the limit only (closed gap, vanishing interval); the API rejects
// these instead of returning limit values.
class DegenerateError : public DomainError {
 public:
  explicit DegenerateError(const std::string& what) : DomainError(what) {}
};

}  // namespace capax
