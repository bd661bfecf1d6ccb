#pragma once

#include <qwave/qcore.hpp>

#include <algorithm>
#include <cmath>
#include <initializer_list>

namespace qwave {

/// Which candidate solution a residual is evaluated on.
enum class residual_family {
    /// Exact q-solution with closed-form derivatives.
    exact,
    /// First-order approximant inserted into the full nonlinear operator
    /// (powers of the approximant taken exactly). O(eps^2).
    approx,
    /// The first-order expansions of every term substituted as written.
    /// Vanishes identically when the dispersion relation holds.
    expansion,
};

/// A residual value together with the largest term that entered it.
struct residual_sample {
    complex_value residual{};
    double scale = 0.0;

    [[nodiscard]] double relative() const
    {
        return scale > 0.0 ? std::abs(residual) / scale : std::abs(residual);
    }
};

[[nodiscard]] inline residual_sample make_residual(std::initializer_list<complex_value> terms)
{
    residual_sample s;
    for (const auto& t : terms) {
        s.residual += t;
        s.scale = std::max(s.scale, std::abs(t));
    }
    return s;
}

} // namespace qwave
