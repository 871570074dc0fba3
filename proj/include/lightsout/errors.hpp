#pragma once

#include <stdexcept>
#include <string>

namespace lightsout {

// Precondition violation (bad argument, dimension mismatch, malformed input).
struct contract_violation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input exceeds a hard size guard of an exhaustive routine.
struct unsupported_size : std::length_error {
    using std::length_error::length_error;
};

// A property that is a theorem failed to hold; indicates a bug, not bad input.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw contract_violation(msg);
}

} // namespace lightsout
