#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pfrob {

enum class ErrorCode {
    Validation,   // malformed input or violated precondition
    Unsupported,  // a case the library deliberately does not compute
    Overflow,     // fixed-width arithmetic would wrap
    OracleBudget, // brute-force reference exceeded its time or memory cap
};

constexpr std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::Validation: return "VALIDATION";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    case ErrorCode::Overflow: return "OVERFLOW";
    case ErrorCode::OracleBudget: return "ORACLE_BUDGET";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, const std::string& message) {
    if (!condition) fail(ErrorCode::Validation, message);
}

} // namespace pfrob
