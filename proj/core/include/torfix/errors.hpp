#pragma once

#include <stdexcept>
#include <string>

namespace torfix {

// Input violates a documented precondition (non-monic where monic is
// required, empty polynomial, bad interval, period too large to tabulate...).
// The CLI maps this to exit code 3.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (JSON syntax, non-integer coefficient strings, ragged
// matrices). The CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A "cannot happen" branch was reached; indicates a bug in this library, not
// in the caller's input. Never worked around, always thrown.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace torfix
