#pragma once

#include <stdexcept>
#include <string>

namespace tchrom {

/// Enumeration size exceeds a configured cap (see limits.hpp).
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A theorem's hypothesis does not hold for the given input, so the
/// identity check was not attempted.
class PreconditionViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed graph, labeling or orientation input.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace tchrom
