#pragma once

#include <stdexcept>
#include <string>

namespace ckpt {

// Invalid input data or parameters (CLI exit code 2).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file content (CLI exit code 2).
class ParseError : public ValidationError {
public:
    explicit ParseError(const std::string& msg) : ValidationError(msg) {}
};

// A requested computation exceeds its enumeration budget (CLI exit code 3).
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ckpt
