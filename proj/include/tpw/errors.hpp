#pragma once

#include <stdexcept>
#include <string>

namespace tpw {

/// A caller broke an operation's documented precondition.
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact solver was asked to handle an instance above its size cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Malformed decomposition indices (out-of-range bag or vertex ids).
class StructuralError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Input that parsed but fails the checks of the structure it claims to be.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the offending line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace tpw
