#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tempograph {

/// Malformed input text; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Non-finite values during integration, or an iteration that failed to converge.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The quantization dictionary cannot be built (e.g. too few distinct values).
class BinningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tempograph
