#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bolsuper {

enum class ErrorKind {
    Precondition,  // input violates an operation's precondition
    Mismatch,      // structure/kind or space mismatch
    Parse,         // malformed algebra file
    Usage,         // bad command line
    Internal       // a postcondition that must hold did not
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error(ErrorKind::Parse,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace bolsuper
