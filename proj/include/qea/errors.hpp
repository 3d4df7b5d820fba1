#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qea {

/// Base of every error raised by the library. Callers that only care about
/// "bad input" vs "bug" can catch this and InvariantViolation separately.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range trend data.
class DataError : public Error {
public:
    DataError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class FitError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Physical error rate at or above the surface-code threshold.
class ThresholdError : public DomainError {
public:
    using DomainError::DomainError;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name)
        : Error("unbound variable '" + name + "'"), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class UnknownId : public Error {
public:
    using Error::Error;
};

/// The cost ratio of an algorithm pair is not monotone, so a single crossover
/// point is not well defined.
class NonMonotoneError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed. Indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qea
