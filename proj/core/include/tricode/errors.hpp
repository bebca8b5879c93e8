#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tricode {

/// Unsupported parameters: unknown (p, m), odd m where even is required, bad CLI values.
class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Embedded or user-supplied data failed a structural check (non-primitive modulus, malformed table).
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact-arithmetic invariant was violated. Never expected on valid input.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A theorem is evaluated outside the parameter range it was proved for.
class HypothesisError : public ConfigurationError {
public:
    using ConfigurationError::ConfigurationError;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget)
        : std::runtime_error("evaluation budget exceeded: need " + std::to_string(required) +
                             " evaluations, budget is " + std::to_string(budget)),
          required_(required), budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000'000ULL;

/// Saturating q^k, used for budget checks.
inline std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

} // namespace tricode
