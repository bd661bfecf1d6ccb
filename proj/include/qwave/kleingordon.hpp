#pragma once

// Plane waves of the q-Klein-Gordon equation
//
//   (1/c^2) d_tt F - d_xx F + (q m^2 c^2/hbar^2) F^{2q-1} = 0,
//   F = e_q(i u),  u = k x - omega t.

#include <qwave/qcore.hpp>
#include <qwave/residual.hpp>

namespace qwave {

/// omega = sqrt(c^2 k^2 + m^2 c^4/hbar^2), positive root.
[[nodiscard]] double dispersion_omega(double k, double m, double c, double hbar);

struct kg_wave {
    double k = 1.0;
    double omega = 1.0;
    double m = 0.0;
    double c = 1.0;
    double hbar = 1.0;
    bool dispersion = false;

    /// omega from dispersion_omega(k, m, c, hbar).
    [[nodiscard]] static kg_wave on_shell(double k, double m, double c = 1.0, double hbar = 1.0);
    [[nodiscard]] static kg_wave with_frequency(double k, double omega, double m, double c = 1.0, double hbar = 1.0);

    [[nodiscard]] double phase(double x, double t) const { return k * x - omega * t; }
};

[[nodiscard]] complex_value exact_F(double x, double t, const kg_wave& w, q_parameter q);
/// F^{2q-1} of the exact wave.
[[nodiscard]] complex_value exact_F_2qm1(double x, double t, const kg_wave& w, q_parameter q);
[[nodiscard]] complex_value exact_d2x_F(double x, double t, const kg_wave& w, q_parameter q);
[[nodiscard]] complex_value exact_d2t_F(double x, double t, const kg_wave& w, q_parameter q);

[[nodiscard]] complex_value approx_F(double x, double t, const kg_wave& w, q_parameter q);
[[nodiscard]] complex_value d2x_approx_F(double x, double t, const kg_wave& w, q_parameter q);
[[nodiscard]] complex_value d2t_approx_F(double x, double t, const kg_wave& w, q_parameter q);
/// First-order expansion of q F^{2q-1}.
[[nodiscard]] complex_value approx_qF2qm1(double x, double t, const kg_wave& w, q_parameter q);
/// (approx_F)^{2q-1} on the continuous branch.
[[nodiscard]] complex_value approx_F_raised_2qm1(double x, double t, const kg_wave& w, q_parameter q);

[[nodiscard]] residual_sample kg_residual_sample(residual_family family, double x, double t, const kg_wave& w,
                                                 q_parameter q);
[[nodiscard]] complex_value residual_kg(double x, double t, const kg_wave& w, q_parameter q,
                                        residual_family family);

} // namespace qwave
