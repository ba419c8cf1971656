#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace driftwalk {

/// Bad input: malformed environment, probability out of range, index out of
/// range. Carries the name of the offending field when one applies.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what, std::string field = {})
        : std::invalid_argument(what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// An exhaustive search would need more candidates than it was allowed.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(what), required_(required), budget_(budget) {}

    /// Saturates at UINT64_MAX.
    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// Problem size beyond the supported scale.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A closed-form expression hit a (near) zero denominator.
class SingularityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace driftwalk
