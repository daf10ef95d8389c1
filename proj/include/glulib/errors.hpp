#pragma once

#include <stdexcept>
#include <string>

namespace glulib {

// Thrown when a computation exceeds a configured size/overflow budget.
// CLI maps this to exit code 2.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a proved identity fails at runtime (soundness bug or bad data).
// CLI maps this to exit code 3.
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

// Argument and domain errors reuse std::invalid_argument / std::domain_error;
// CLI maps both to exit code 1.

} // namespace glulib
