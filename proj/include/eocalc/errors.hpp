#pragma once

#include <stdexcept>
#include <string>

namespace eocalc {

// Thrown when a computation exceeds a configured cap (basis size, pair count,
// polynomial degree, standard-monomial count, ...).  Deliberately distinct from
// both usage errors (std::invalid_argument) and mathematical failure verdicts,
// so callers can map it to its own exit code.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// An exact polynomial division left a nonzero remainder where exactness is a
// theorem.  Signals an internal bug or an invalid context, never a valid input.
struct NonExactDivisionError : std::logic_error {
    explicit NonExactDivisionError(const std::string& what) : std::logic_error(what) {}
};

// A relation file failed schema validation (arity, degrees, action, ...).
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace eocalc
