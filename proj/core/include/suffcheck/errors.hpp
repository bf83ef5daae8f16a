#pragma once

#include <stdexcept>
#include <string>

namespace suffcheck {

// Every failure the library reports carries one of these codes. The CLI maps
// them onto exit classes (usage / data / resource-cap).
enum class ErrorCode {
    InvalidState,
    IndexOutOfRange,
    InvalidCoordSet,
    StateSpaceTooLarge,
    TooManyVariables,
    LengthMismatch,
    SplitMismatch,
    ParseError,
    VarIndexZero,
    ZeroGap,
    DegenerateSplit,
    UniverseMismatch,
    Overflow,
    DataFormat,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* code_name() const noexcept { return error_code_name(code_); }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace suffcheck
