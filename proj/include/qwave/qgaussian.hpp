#pragma once

// Time-dependent q-Gaussian with m q alpha = 1, in units where hbar ~ 1:
//
//   psi(x,t) = {1 + (q-1)[a(t) x^2 + b(t) x + c(t)]}^{1/(1-q)}
//   a(t) = m q / G,   b(t) = 1/(beta G),   G = 1 + i hbar (q+1) t
//   c(t) = (1/(q-1) - 1/(4 m q beta^2)) G^{(q-1)/(q+1)} + 1/(4 m q beta^2 G) + 1/(1-q)
//
// and its first-order split a = a1 + (q-1) a2, etc.

#include <qwave/qcore.hpp>
#include <qwave/residual.hpp>
#include <qwave/verify.hpp>

namespace qwave {

struct gaussian_params {
    double m = 1.0;
    double beta = 1.0;
    q_parameter q{};
    double hbar = 1.0;
};

struct gaussian_coeffs {
    complex_value a{};
    complex_value b{};
    complex_value c{};

    [[nodiscard]] complex_value polynomial(double x) const { return (a * x + b) * x + c; }
};

struct gaussian_coeff_jet {
    complex_value a1{}, a2{};
    complex_value b1{}, b2{};
    complex_value c1{}, c2{};

    [[nodiscard]] gaussian_coeffs leading() const { return {a1, b1, c1}; }
    [[nodiscard]] gaussian_coeffs correction() const { return {a2, b2, c2}; }
    [[nodiscard]] gaussian_coeffs evaluate(double eps) const
    {
        return {a1 + eps * a2, b1 + eps * b2, c1 + eps * c2};
    }
};

[[nodiscard]] gaussian_coeffs coeffs_exact(double t, const gaussian_params& params);
/// Closed forms of a1, a2, b1, b2, c1, c2 (q does not enter).
[[nodiscard]] gaussian_coeff_jet coeffs_first_order(double t, const gaussian_params& params);

/// The same split obtained by jet arithmetic on the exact a, b, c.
[[nodiscard]] gaussian_coeff_jet coeffs_jet(double t, const gaussian_params& params);
/// psi = e_q(-(a x^2 + b x + c)) as a jet in eps, from coeffs_jet.
[[nodiscard]] q_jet qgaussian_jet(double x, double t, const gaussian_params& params);

[[nodiscard]] complex_value exact_qgaussian(double x, double t, const gaussian_params& params);
/// psi^q of the exact q-Gaussian, continuous branch.
[[nodiscard]] complex_value exact_qgaussian_q(double x, double t, const gaussian_params& params);

/// {1 - (q-1)[a2 x^2 + b2 x + c2 - (a1 x^2 + b1 x + c1)^2/2]} e^{-(a1 x^2 + b1 x + c1)}
[[nodiscard]] complex_value approx_qgaussian(double x, double t, const gaussian_params& params);
/// (approx_qgaussian)^q, continuous branch.
[[nodiscard]] complex_value approx_qgaussian_raised_q(double x, double t, const gaussian_params& params);

/// |approx / exact|.
[[nodiscard]] double ratio_gaussian(double x, double t, const gaussian_params& params);

struct gaussian_residual {
    residual_sample sample;
    /// Combined finite-difference error estimate of the two derivative terms.
    double fd_error = 0.0;
};

/// i hbar FD_t(psi^q) + (hbar^2/2m) FD_xx(psi) at (x, t). `family` is
/// exact or approx. Throws StepTooCoarse when the Richardson error estimate
/// exceeds max_rel_fd_error times the largest term.
[[nodiscard]] gaussian_residual qgaussian_residual_sample(double x, double t, const gaussian_params& params,
                                                          const fd_scheme& scheme, residual_family family,
                                                          double max_rel_fd_error = 1e-6);
[[nodiscard]] complex_value residual_qgaussian(double x, double t, const gaussian_params& params,
                                               const fd_scheme& scheme,
                                               residual_family family = residual_family::approx);

} // namespace qwave
