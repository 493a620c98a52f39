#pragma once

#include <stdexcept>
#include <string>

namespace rbd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or rejected input (precondition violations, parse errors).
struct InputError : Error {
    using Error::Error;
};

// The question is well-posed but outside what this tool decides
// (e.g. equivalence of definite forms of rank > 2).
struct NotDecided : Error {
    using Error::Error;
};

}  // namespace rbd
