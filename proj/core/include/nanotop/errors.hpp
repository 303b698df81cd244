#pragma once

#include <stdexcept>
#include <string>

namespace nanotop {

// Error for malformed space/map description files; carries the 1-based line
// number the problem was detected on.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace nanotop
