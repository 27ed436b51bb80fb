#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goldlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A value carried both labels inside one prefix.
class ContradictionError : public Error {
public:
    using Error::Error;
};

// A schedule or simulating-function rule that fails its static coverage check.
class ScheduleError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// The descriptor algebra has no rule for this pair; compare on a horizon instead.
class UndecidedSymbolically : public Error {
public:
    using Error::Error;
};

class OracleUnavailable : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class DelayContractViolation : public Error {
public:
    DelayContractViolation(std::size_t step, const std::string& what)
        : Error("delay contract violated at t=" + std::to_string(step) + ": " + what), step_(step) {}
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace goldlab
