#include "dhf/error.hpp"

namespace dhf {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::InvalidZParameter: return "InvalidZParameter";
    case ErrorCode::NoConsistentCoupling: return "NoConsistentCoupling";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::DuplicateBasisFunction: return "DuplicateBasisFunction";
    case ErrorCode::SingularOverlap: return "SingularOverlap";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoElectronicState: return "NoElectronicState";
    case ErrorCode::SCFFailureAtTrialPoint: return "SCFFailureAtTrialPoint";
    case ErrorCode::NoProgress: return "NoProgress";
    case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

} // namespace dhf
