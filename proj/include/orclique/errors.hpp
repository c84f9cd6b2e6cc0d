#pragma once

#include <stdexcept>
#include <string>

namespace orclique {

// Malformed input: bad tokens, bad DIMACS structure. Carries a 1-based line
// number when one is known (0 otherwise).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

// Well-formed input that violates a graph invariant (self-loop, duplicate
// edge, id out of range).
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

// A library-internal guarantee failed to hold at runtime.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace orclique
