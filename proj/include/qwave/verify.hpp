#pragma once

/**
 * Verification machinery: central finite differences with Richardson
 * extrapolation, finite differences in q at q = 1, max-norm residual
 * reports over (x, t) grids, and convergence-order fits in eps = q - 1.
 */

#include <qwave/qcore.hpp>
#include <qwave/residual.hpp>

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qwave {

struct fd_scheme {
    double step = 1e-2;
    /// Stencil order, 2 or 4.
    int order = 4;
    /// Number of Richardson halvings applied on top of the base stencil.
    int richardson_levels = 2;
};

struct fd_result {
    complex_value value{};
    /// Estimated absolute error of `value`.
    double error_estimate = 0.0;
};

using complex_function = std::function<complex_value(double)>;

/// d^n/dx^n fn(at) for n in {1, 2}. Throws StencilEvaluationFailed if fn
/// throws or returns a non-finite value on the stencil.
[[nodiscard]] fd_result fd_derivative(const complex_function& fn, double at, const fd_scheme& scheme,
                                      int derivative = 1);

/// d/dq fn(q) at q = 1.
[[nodiscard]] fd_result fd_q_derivative(const std::function<complex_value(q_parameter)>& fn,
                                        const fd_scheme& scheme = {1e-3, 4, 3});

struct order_fit {
    std::vector<double> epsilons;
    std::vector<double> residual_norms;
    /// Least-squares slope of log(norm) against log(eps); +infinity when
    /// every norm is exactly zero.
    double slope = 0.0;
    double r_squared = 0.0;

    [[nodiscard]] bool identically_zero() const;
};

/// {1e-2, 10^-2.5, 1e-3, 10^-3.5, 1e-4}
[[nodiscard]] std::vector<double> default_epsilon_ladder();

/// Fits the residual norm against eps. The epsilons must be strictly
/// decreasing, at least three, spanning at least two decades.
/// Throws DegenerateFit for a mix of zero and non-zero norms, or for
/// negative / non-finite norms.
[[nodiscard]] order_fit order_of_convergence(const std::function<double(double)>& residual_norm,
                                             std::span<const double> epsilons);

struct grid_2d {
    double x_min = 0.0;
    double x_max = 1.0;
    std::size_t nx = 2;
    double t_min = 0.0;
    double t_max = 0.0;
    std::size_t nt = 1;

    [[nodiscard]] double x(std::size_t i) const;
    [[nodiscard]] double t(std::size_t j) const;
    [[nodiscard]] std::size_t size() const { return nx * nt; }
};

struct residual_report {
    double max_abs = 0.0;
    /// Largest |residual| / (largest term magnitude) over the grid points.
    double max_rel = 0.0;
    /// Location of max_abs.
    double argmax_x = 0.0;
    double argmax_t = 0.0;
    std::size_t nx = 0;
    std::size_t nt = 0;
};

using residual_function = std::function<residual_sample(double x, double t)>;

[[nodiscard]] residual_report grid_residual(const residual_function& fn, const grid_2d& grid, unsigned workers = 1);

/// |a - b| / max(|b|, floor)
[[nodiscard]] double relative_error(complex_value a, complex_value b, double floor = 0.0);

} // namespace qwave
