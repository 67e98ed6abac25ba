#pragma once

#include <stdexcept>
#include <string>

namespace hopfchar {

// Violated precondition or incompatible operands (CLI exit code 1).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (CLI exit code 2). Carries a line number when known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, long line = 0)
        : std::runtime_error(line > 0 ? std::to_string(line) + ": " + what : what),
          line_(line) {}

    long line() const { return line_; }

private:
    long line_ = 0;
};

} // namespace hopfchar
