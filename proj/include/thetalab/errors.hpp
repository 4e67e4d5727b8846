#pragma once

#include <stdexcept>
#include <string>

namespace thetalab {

/// Malformed input: unknown vertex, bad parameters, unparsable file.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a text file cannot be parsed; carries the 1-based line.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// An exact search refused to start because its input exceeds a size cap.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// An operation's precondition does not hold (e.g. collapsing a non-free face).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The quantity is not defined for this input (e.g. privacy degree of an edgeless graph).
class UndefinedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A bounded exhaustive search ran out of its node budget before reaching a verdict.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace thetalab
