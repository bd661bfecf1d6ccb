#pragma once

// Plane-wave solutions of the free q-Schroedinger equation
//
//   i hbar d/dt (psi^q) = -(hbar^2 / 2m) d^2/dx^2 psi,   psi(0,0) = 1,
//
// exact:       psi = e_q(i u),  u = (p x - E t)/hbar
// first order: psi ~ e^{iu} [1 + (1-q) u^2/2]

#include <qwave/qcore.hpp>
#include <qwave/residual.hpp>

namespace qwave {

struct schrodinger_wave {
    double p = 1.0;
    double E = 0.5;
    double m = 1.0;
    double hbar = 1.0;
    bool free_particle = true;

    /// E = p^2/(2m).
    [[nodiscard]] static schrodinger_wave free(double p, double m, double hbar = 1.0);
    [[nodiscard]] static schrodinger_wave with_energy(double p, double E, double m, double hbar = 1.0);

    [[nodiscard]] double phase(double x, double t) const { return (p * x - E * t) / hbar; }
};

struct phase_point {
    double x = 0.0;
    double t = 0.0;
};

[[nodiscard]] complex_value exact_psi(phase_point pt, const schrodinger_wave& w, q_parameter q);
/// psi^q of the exact solution, continuous branch.
[[nodiscard]] complex_value exact_psi_q(phase_point pt, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value exact_dx_psi(phase_point pt, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value exact_d2x_psi(phase_point pt, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value exact_dt_psi_q(phase_point pt, const schrodinger_wave& w, q_parameter q);

[[nodiscard]] complex_value approx_psi(phase_point pt, const schrodinger_wave& w, q_parameter q);
/// First-order expansion of psi^q.
[[nodiscard]] complex_value approx_psi_q(phase_point pt, const schrodinger_wave& w, q_parameter q);
/// Exact second x-derivative of approx_psi.
[[nodiscard]] complex_value d2x_approx_psi(phase_point pt, const schrodinger_wave& w, q_parameter q);
/// Exact t-derivative of approx_psi_q.
[[nodiscard]] complex_value dt_approx_psi_q(phase_point pt, const schrodinger_wave& w, q_parameter q);

/// (approx_psi)^q on the continuous branch, and its t-derivative.
[[nodiscard]] complex_value approx_psi_raised_q(phase_point pt, const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value dt_approx_psi_raised_q(phase_point pt, const schrodinger_wave& w, q_parameter q);

/// i hbar d_t(psi^q) + (hbar^2/2m) d_xx psi.
[[nodiscard]] residual_sample schrodinger_residual_sample(residual_family family, phase_point pt,
                                                          const schrodinger_wave& w, q_parameter q);
[[nodiscard]] complex_value residual_schrodinger(residual_family family, phase_point pt, const schrodinger_wave& w,
                                                 q_parameter q);

/// |approx_psi / exact_psi|.
[[nodiscard]] double ratio_R(phase_point pt, const schrodinger_wave& w, q_parameter q);

} // namespace qwave
