#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace repsim {

// Invalid user-supplied values: parameter ranges, malformed configs,
// inconsistent experiment settings. The CLI maps these to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& message) : std::invalid_argument(message) {}
};

// A named parameter or field violated its stated range.
class OutOfRangeError : public ValidationError {
public:
    OutOfRangeError(std::string field, const std::string& detail)
        : ValidationError(field + ": " + detail), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// NaN or infinity where a finite number is required.
class NonFiniteError : public ValidationError {
public:
    explicit NonFiniteError(std::string field)
        : ValidationError(field + ": must be finite"), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Numerical failure at run time (degenerate states, chattering solutions).
// The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& message) : std::runtime_error(message) {}
};

// Filesystem failure. The CLI maps these to exit code 4.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace repsim
