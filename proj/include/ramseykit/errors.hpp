#pragma once

#include <stdexcept>
#include <string>

namespace rk {

// Invalid mathematical input (p outside (0,1), non-prime Paley modulus, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& m) : std::invalid_argument(m) {}
};

// Instance exceeds a hard structural cap (canonical-form vertex cap, census cap, ...).
struct SizeError : std::length_error {
    explicit SizeError(const std::string& m) : std::length_error(m) {}
};

// Instance exceeds the configured work budget for an enumeration.
struct BudgetError : std::length_error {
    explicit BudgetError(const std::string& m) : std::length_error(m) {}
};

// Caller violated an operation precondition (no vertex of the requested degree, ...).
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& m) : std::invalid_argument(m) {}
};

}  // namespace rk
