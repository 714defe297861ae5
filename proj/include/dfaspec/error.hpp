#ifndef DFASPEC_ERROR_HPP
#define DFASPEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dfaspec {

enum class ErrorCode {
    NonSquare,
    DimensionMismatch,
    BlockCountMismatch,
    ExpansionNotIntegral,
    NonMonic,
    InvalidPartition,
    ParseError,
    RegexSyntaxError,
    EmptyAutomaton,
    NotACongruence,
    WordNotInLanguage,
    IndexOutOfLanguage,
    MalformedIndexBytes,
    NotRankOne,
    ZeroMatrix,
    InvalidExponent,
    EmptyLanguage,
};

const char* error_code_name(ErrorCode code);

/// Domain error carrying a machine-readable code plus a human detail string.
/// what() is formatted as "<Code>: <detail>".
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
          code_(code),
          detail_(std::move(detail)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace dfaspec

#endif
