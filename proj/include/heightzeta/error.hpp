#ifndef HEIGHTZETA_ERROR_HPP
#define HEIGHTZETA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hz {

// Bad user input or a violated hypothesis. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Enumeration refused because it would exceed the element budget.
class BudgetError : public ValidationError {
public:
    explicit BudgetError(const std::string& what) : ValidationError(what) {}
};

// An exact identity that should hold did not. The CLI maps this to exit code 3.
class IdentityError : public std::runtime_error {
public:
    explicit IdentityError(const std::string& what) : std::runtime_error(what) {}
};

// A denominator factor whose roots do not share one modulus; exact orbit
// summation is not available for it. Exit code 3.
class MixedModulusError : public std::runtime_error {
public:
    explicit MixedModulusError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hz

#endif
