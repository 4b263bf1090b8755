#pragma once

#include <stdexcept>
#include <string>

namespace lie2 {

// Bad arguments from the caller (wrong sizes, malformed specs, out-of-range parameters).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Mathematically undefined requests, e.g. inverting zero.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A configured search or closure bound was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A self-check failed; indicates a bug upstream rather than bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace lie2
