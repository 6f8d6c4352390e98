#pragma once

#include <stdexcept>
#include <string>

namespace pte {

/// Raised when an input violates an operation's precondition (malformed data,
/// wrong parameters, a hypothesis of a construction that does not hold).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a construction produced an object that failed its own
/// re-verification. Seeing this means a bug, not bad input.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw InvalidInput(message);
}

} // namespace pte
