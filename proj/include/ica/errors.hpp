#pragma once

#include <stdexcept>
#include <string>

namespace ica {

// Error categories surfaced by the library. The CLI maps every Error to
// exit code 2 (usage / bad input), while validation findings travel as
// data in a ValidationReport, not as exceptions.
enum class ErrorCode {
    Syntax,                   // malformed input bytes (JSON/CSV)
    Schema,                   // missing, extra, or mistyped field
    UnknownCoder,
    UnknownDomain,
    UnknownId,
    UnknownEndpoint,
    InvalidRelationType,
    FewerThanTwoCoders,
    MutualExclusiveness,      // projection cannot proceed
    NoAuthoritativeCoder,
    CodebookMismatch,
    InsufficientData,
    EmptyLabelSet,
    InvalidMetric,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Parse failures carry a position when the underlying reader provides one.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::string message, std::size_t line = 0,
               std::size_t column = 0)
        : Error(code, std::move(message)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace ica
