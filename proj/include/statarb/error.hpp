// error.hpp
// Error codes and the exception type shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace statarb {

enum class ErrorCode {
    io_error = 1,
    malformed_input,
    insufficient_data,
    numerical_error,
    dimension_mismatch,
    invalid_argument,
    no_cointegration,
    filter_underflow,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::io_error: return "io_error";
        case ErrorCode::malformed_input: return "malformed_input";
        case ErrorCode::insufficient_data: return "insufficient_data";
        case ErrorCode::numerical_error: return "numerical_error";
        case ErrorCode::dimension_mismatch: return "dimension_mismatch";
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::no_cointegration: return "no_cointegration";
        case ErrorCode::filter_underflow: return "filter_underflow";
    }
    return "unknown";
}

}  // namespace statarb
