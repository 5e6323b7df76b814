#pragma once

#include <stdexcept>
#include <string>

namespace springer {

// Bad user-facing input: malformed text, invalid partition, entries out of range.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Request exceeds a configured enumeration or oracle bound.
struct bound_error : std::runtime_error {
    explicit bound_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation applied outside its stated precondition.
struct precondition_error : std::logic_error {
    explicit precondition_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace springer
