#pragma once

#include <stdexcept>
#include <string>

namespace gp {

// Edge-list input that fails to parse. Message is "path:line: what".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Operation requires a connected graph (e.g. diameter of a disconnected one).
class DisconnectedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Operation requires a regular graph.
class NotRegularError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A size guard or attempt cap was exceeded.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File could not be opened or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gp
