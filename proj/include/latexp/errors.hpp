#pragma once

#include <stdexcept>
#include <string>

namespace latexp {

// Bad user input: malformed files, out-of-range parameters, violated
// preconditions that a caller can trigger. CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant. Never expected on valid input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace latexp
