#pragma once

#include <stdexcept>
#include <string>

namespace momentum {

// Rejected user input: malformed task, incompatible data, out-of-domain parameters.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A self-check failed; indicates a bug rather than bad input.
struct InvariantBreach : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace momentum
