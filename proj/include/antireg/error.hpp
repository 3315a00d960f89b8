#pragma once

#include <stdexcept>
#include <string>

namespace antireg {

/// Caller supplied something outside an operation's domain (empty sequence, n = 0, bad grid, ...).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// An exact identity that must hold by construction did not. Always an implementation bug.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// Iterative eigensolver gave up or failed its post-check.
class NumericFailure : public std::runtime_error {
public:
    explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace antireg
