#pragma once

#include <stdexcept>
#include <string>

namespace congruent {

// Input failed a structural or mathematical precondition (bad rational
// string, off-curve point, non-squarefree t, malformed record, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A line-oriented input could not be parsed. Carries the 1-based line.
class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, const std::string& msg)
        : ValidationError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// The requested computation exceeds the configured desk-scale budget
// (factorization bound, search bound, box size).
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant that should be unbreakable was broken. Always a bug
// (or an extraordinary mathematical event worth a loud stop).
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace congruent
