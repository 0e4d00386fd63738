#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semipos {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A documented precondition of a constructive routine was violated.
class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SearchExhaustedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg, const std::string& source = {})
        : std::runtime_error(source.empty() ? "line " + std::to_string(line) + ": " + msg
                                            : source + ":" + std::to_string(line) + ": " + msg),
          line_(line),
          message_(msg) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::string message_;
};

}  // namespace semipos
