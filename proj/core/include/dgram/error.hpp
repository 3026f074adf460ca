#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgram {

// Bad input: out-of-range indices, parameter windows, malformed text.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation would exceed the configured dimension budget.
class GuardExceeded : public std::runtime_error {
public:
    GuardExceeded(const std::string& what, std::size_t projected)
        : std::runtime_error(what), projected_(projected) {}
    std::size_t projected() const { return projected_; }

private:
    std::size_t projected_;
};

}  // namespace dgram
