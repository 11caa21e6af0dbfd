#pragma once

#include <stdexcept>
#include <string>

namespace loosecyc {

// Raised when caller-supplied data violates an operation's preconditions.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when an internal invariant that the construction guarantees does not
// hold. Always a bug (or an input that silently broke a precondition).
struct ClaimViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace loosecyc
