#pragma once

#include <stdexcept>
#include <string>

namespace relaxwave {

/// Error taxonomy shared by all modules. The CLI maps categories to exit
/// codes: config/usage -> 2, numeric failure -> 3, hypothesis violation -> 4.
enum class errc {
    // config / usage
    syntax_error,
    unknown_identifier,
    invalid_argument,
    config_error,
    cfl_violation,
    // numeric failure
    domain_error,
    evaluation_error,
    quadrature_underflow,
    overflow,
    divergence,
    missing_field,
    grid_mismatch,
    empty_trajectory,
    // hypothesis violation
    subcharacteristic_violation,
    nonpositive_parameter,
    wrong_sign,
    not_applicable,
    hypothesis_violation,
    compatibility_failure,
};

class Error : public std::runtime_error {
public:
    Error(errc code, std::string module, const std::string& message)
        : std::runtime_error(message), code_(code), module_(std::move(module)) {}

    errc code() const { return code_; }
    const std::string& module() const { return module_; }

    /// CLI exit code for this error category.
    int exit_code() const {
        switch (code_) {
            case errc::syntax_error:
            case errc::unknown_identifier:
            case errc::invalid_argument:
            case errc::config_error:
            case errc::cfl_violation:
                return 2;
            case errc::domain_error:
            case errc::evaluation_error:
            case errc::quadrature_underflow:
            case errc::overflow:
            case errc::divergence:
            case errc::missing_field:
            case errc::grid_mismatch:
            case errc::empty_trajectory:
                return 3;
            default:
                return 4;
        }
    }

private:
    errc code_;
    std::string module_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::syntax_error: return "SyntaxError";
        case errc::unknown_identifier: return "UnknownIdentifier";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::config_error: return "ConfigError";
        case errc::cfl_violation: return "CFLViolation";
        case errc::domain_error: return "DomainError";
        case errc::evaluation_error: return "EvaluationError";
        case errc::quadrature_underflow: return "QuadratureUnderflow";
        case errc::overflow: return "Overflow";
        case errc::divergence: return "Divergence";
        case errc::missing_field: return "MissingField";
        case errc::grid_mismatch: return "GridMismatch";
        case errc::empty_trajectory: return "EmptyTrajectory";
        case errc::subcharacteristic_violation: return "SubcharacteristicViolation";
        case errc::nonpositive_parameter: return "NonpositiveParameter";
        case errc::wrong_sign: return "WrongSign";
        case errc::not_applicable: return "NotApplicable";
        case errc::hypothesis_violation: return "HypothesisViolation";
        case errc::compatibility_failure: return "CompatibilityFailure";
    }
    return "Unknown";
}

}  // namespace relaxwave
