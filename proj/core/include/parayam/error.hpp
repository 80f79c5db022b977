#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parayam {

// Base class for every error the library raises deliberately.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by the expression parser; offset is a 0-based byte position into
// the parsed text.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t offset)
        : Error(std::move(message)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_ = 0;
};

// Raised when input is syntactically fine but mathematically unusable
// (singular metric, failed structure axiom in strict mode, bad valence, ...).
// `where` names the offending object or file section.
class SemanticError : public Error {
public:
    SemanticError(std::string message, std::string where = {})
        : Error(where.empty() ? std::move(message) : where + ": " + message),
          where_(std::move(where)) {}

    const std::string& where() const { return where_; }

private:
    std::string where_;
};

} // namespace parayam
