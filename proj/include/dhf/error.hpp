#pragma once

#include <stdexcept>
#include <string>

namespace dhf {

enum class ErrorCode {
    NonPositiveArgument,
    DomainError,
    NoConvergence,
    DegenerateDenominator,
    InvalidZParameter,
    NoConsistentCoupling,
    ZeroFunction,
    DuplicateBasisFunction,
    SingularOverlap,
    DimensionMismatch,
    NoElectronicState,
    SCFFailureAtTrialPoint,
    NoProgress,
    ConfigError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace dhf
