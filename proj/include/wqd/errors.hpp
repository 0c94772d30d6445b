#pragma once

#include <stdexcept>
#include <string>

namespace wqd {

// Scenario text failed schema validation (CLI exit code 2).
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// A comoving-frame relation left its causal domain (CLI exit code 3).
class CausalityError : public std::runtime_error {
 public:
  explicit CausalityError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid physical parameter (superluminal motion, bad argument, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A result that should be real picked up an imaginary residue above
// tolerance, i.e. the integrand's symmetry conventions were violated.
class ConventionError : public std::runtime_error {
 public:
  explicit ConventionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wqd
