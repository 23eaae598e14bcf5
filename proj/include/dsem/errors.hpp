#pragma once

#include <stdexcept>
#include <string>

namespace dsem {

enum class ErrorCode {
    NonManifold,
    DisconnectedMap,
    InconsistentRotation,
    UnknownVertex,
    NotTwoClasses,
    InadmissibleParams,
    TypeVerificationFailed,
    RuleMismatch,
    NotACycle,
    InvalidRadius,
    BadSpec,
    BadWord,
    ParseError,
    IoError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace dsem
