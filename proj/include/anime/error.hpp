#pragma once

#include <stdexcept>
#include <string>

namespace anime {

// Caller misuse: mixed feature types, malformed labels, violated preconditions.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A broken internal invariant. Seeing one of these is a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace anime
