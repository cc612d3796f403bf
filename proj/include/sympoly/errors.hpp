#pragma once

#include <stdexcept>
#include <string>

namespace sympoly {

// Bad input: violated precondition, malformed file, inadmissible parameters.
// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant. Always a bug, never repaired silently.
// The CLI maps this to exit code 3.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sympoly
