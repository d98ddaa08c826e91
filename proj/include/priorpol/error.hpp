#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace priorpol {

// Base for every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input with a 1-based line number (0 when not line-oriented).
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line)
    {
    }

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace priorpol
