#pragma once

// Separated solutions psi = f(t) g(x) of the q-Schroedinger equation:
//
//   i hbar d_t(f^q) = lambda f,        -(hbar^2/2m) d_xx g = lambda g^q
//
//   f(t) = [1 + (i/hbar) ((1-q)/q) E t]^{1/(q-1)}
//   g(x) = [1 + (i/hbar) ((1-q)/sqrt(2(q+1))) p x]^{2/(1-q)}

#include <qwave/planewave.hpp>

namespace qwave {

struct separation_constant {
    double lambda = 0.5;

    /// lambda = p^2/(2m).
    [[nodiscard]] static separation_constant free_particle(const schrodinger_wave& w)
    {
        return {w.p * w.p / (2.0 * w.m)};
    }
};

// f(t); uses w.E and w.hbar. InvalidQ for q = 0.
[[nodiscard]] complex_value exact_f(double t, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value exact_f_q(double t, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value exact_dt_f_q(double t, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value approx_f(double t, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value approx_f_q(double t, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value dt_approx_f_q(double t, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value approx_f_raised_q(double t, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value dt_approx_f_raised_q(double t, const schrodinger_wave& w, q_parameter q);

// g(x); uses w.p and w.hbar. InvalidQ for q <= -1.
[[nodiscard]] complex_value exact_g(double x, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value exact_g_q(double x, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value exact_d2x_g(double x, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value approx_g(double x, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value approx_g_q(double x, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value d2x_approx_g(double x, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value approx_g_raised_q(double x, const schrodinger_wave& w, q_parameter q);

/// i hbar d_t(f^q) - lambda f
[[nodiscard]] residual_sample f_residual_sample(residual_family family, double t, const schrodinger_wave& w,
                                                separation_constant lambda, q_parameter q);
/// -(hbar^2/2m) d_xx g - lambda g^q
[[nodiscard]] residual_sample g_residual_sample(residual_family family, double x, const schrodinger_wave& w,
                                                separation_constant lambda, q_parameter q);

[[nodiscard]] complex_value residual_f(residual_family family, double t, const schrodinger_wave& w,
                                       separation_constant lambda, q_parameter q);
[[nodiscard]] complex_value residual_g(residual_family family, double x, const schrodinger_wave& w,
                                       separation_constant lambda, q_parameter q);

} // namespace qwave
