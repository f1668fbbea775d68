#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dea {

enum class ErrorCode {
    dimension_mismatch,
    numerical_breakdown,
    empty_scenario,
    invalid_scenario,
    unsolvable_lp,
    non_positive_price,
    domain_error,
    parse_error,
    missing_value,
    negative_value,
    unknown_metric,
    unknown_dmu,
    all_zero_profile,
    zero_coverage,
    unsupported_format,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with a 1-based source position (line 0 means unknown).
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(ErrorCode::parse_error, format(message, line, column)),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        if (line == 0) return message;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

}  // namespace dea
