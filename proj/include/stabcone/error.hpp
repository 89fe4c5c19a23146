#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabcone {

// Invalid mathematical input: a malformed algebra, word, cone or poset.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Bad invocation of the command line tool (unknown flag, missing file).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace stabcone
