#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qwave {

enum class errc {
    branch_cut_violation,
    non_finite_input,
    non_finite_result,
    division_by_zero,
    division_by_zero_jet,
    invalid_q,
    invalid_parameter,
    stencil_evaluation_failed,
    degenerate_fit,
    step_too_coarse,
};

[[nodiscard]] constexpr std::string_view to_string(errc code) noexcept
{
    switch (code) {
    case errc::branch_cut_violation: return "BranchCutViolation";
    case errc::non_finite_input: return "NonFiniteInput";
    case errc::non_finite_result: return "NonFiniteResult";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::division_by_zero_jet: return "DivisionByZeroJet";
    case errc::invalid_q: return "InvalidQ";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::stencil_evaluation_failed: return "StencilEvaluationFailed";
    case errc::degenerate_fit: return "DegenerateFit";
    case errc::step_too_coarse: return "StepTooCoarse";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {}

    [[nodiscard]] errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace qwave
