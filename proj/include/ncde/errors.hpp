#pragma once

#include <stdexcept>
#include <string>

namespace ncde {

// Error taxonomy: shape mismatches, bad user input, malformed files,
// numeric failures (non-finite values, singular systems), and broken
// API contracts. The CLI maps these onto stable exit codes.

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

struct ContractError : std::logic_error {
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

} // namespace ncde
