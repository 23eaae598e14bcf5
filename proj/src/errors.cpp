#include "dsem/errors.hpp"

namespace dsem {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonManifold: return "NonManifold";
        case ErrorCode::DisconnectedMap: return "DisconnectedMap";
        case ErrorCode::InconsistentRotation: return "InconsistentRotation";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NotTwoClasses: return "NotTwoClasses";
        case ErrorCode::InadmissibleParams: return "InadmissibleParams";
        case ErrorCode::TypeVerificationFailed: return "TypeVerificationFailed";
        case ErrorCode::RuleMismatch: return "RuleMismatch";
        case ErrorCode::NotACycle: return "NotACycle";
        case ErrorCode::InvalidRadius: return "InvalidRadius";
        case ErrorCode::BadSpec: return "BadSpec";
        case ErrorCode::BadWord: return "BadWord";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace dsem
