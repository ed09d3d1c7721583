#pragma once

#include <stdexcept>
#include <string>

namespace showprof {

// Bad input data or unmet operation precondition. CLI maps this to exit 1.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad invocation: unknown flag, unknown selector, missing argument. Exit 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace showprof
