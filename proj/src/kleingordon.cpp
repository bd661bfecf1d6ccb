#include <qwave/kleingordon.hpp>

#include <cmath>

namespace qwave {

namespace {

void validate(const kg_wave& w)
{
    require_finite(w.k, "k");
    require_finite(w.omega, "omega");
    require_finite(w.m, "m");
    require_finite(w.c, "c");
    require_finite(w.hbar, "hbar");
    if (!(w.m >= 0.0))
        throw error(errc::invalid_parameter, "mass must be non-negative");
    if (!(w.c > 0.0))
        throw error(errc::invalid_parameter, "c must be positive");
    if (!(w.hbar > 0.0))
        throw error(errc::invalid_parameter, "hbar must be positive");
}

double checked_phase(double x, double t, const kg_wave& w, q_parameter q)
{
    validate(w);
    require_finite(x, "x");
    require_finite(t, "t");
    require_finite(q.q, "q");
    return w.phase(x, t);
}

complex_value unit_phase(double u) { return std::exp(complex_value{0.0, u}); }

} // namespace

double dispersion_omega(double k, double m, double c, double hbar)
{
    const double rest = m * c * c / hbar;
    return std::hypot(c * k, rest);
}

kg_wave kg_wave::on_shell(double k, double m, double c, double hbar)
{
    kg_wave w{k, 0.0, m, c, hbar, true};
    validate(w);
    w.omega = dispersion_omega(k, m, c, hbar);
    return w;
}

kg_wave kg_wave::with_frequency(double k, double omega, double m, double c, double hbar)
{
    kg_wave w{k, omega, m, c, hbar, false};
    validate(w);
    return w;
}

complex_value exact_F(double x, double t, const kg_wave& w, q_parameter q)
{
    return q_exp(complex_value{0.0, checked_phase(x, t, w, q)}, q);
}

complex_value exact_F_2qm1(double x, double t, const kg_wave& w, q_parameter q)
{
    const double u = checked_phase(x, t, w, q);
    return checked_result(std::exp((2.0 * q.q - 1.0) * q_log_exp(complex_value{0.0, u}, q)), "F^(2q-1)");
}

complex_value exact_d2x_F(double x, double t, const kg_wave& w, q_parameter q)
{
    return -(w.k * w.k * q.q) * exact_F_2qm1(x, t, w, q);
}

complex_value exact_d2t_F(double x, double t, const kg_wave& w, q_parameter q)
{
    return -(w.omega * w.omega * q.q) * exact_F_2qm1(x, t, w, q);
}

complex_value approx_F(double x, double t, const kg_wave& w, q_parameter q)
{
    const double u = checked_phase(x, t, w, q);
    return unit_phase(u) * (1.0 + 0.5 * q.one_minus_q() * u * u);
}

complex_value d2x_approx_F(double x, double t, const kg_wave& w, q_parameter q)
{
    const double u = checked_phase(x, t, w, q);
    return -(w.k * w.k) * unit_phase(u) * first_order_bracket(u, q);
}

complex_value d2t_approx_F(double x, double t, const kg_wave& w, q_parameter q)
{
    const double u = checked_phase(x, t, w, q);
    return -(w.omega * w.omega) * unit_phase(u) * first_order_bracket(u, q);
}

complex_value approx_qF2qm1(double x, double t, const kg_wave& w, q_parameter q)
{
    const double u = checked_phase(x, t, w, q);
    return unit_phase(u) * first_order_bracket(u, q);
}

complex_value approx_F_raised_2qm1(double x, double t, const kg_wave& w, q_parameter q)
{
    const double u = checked_phase(x, t, w, q);
    const double g = 1.0 + 0.5 * q.one_minus_q() * u * u;
    if (!(g > 0.0))
        throw error(errc::branch_cut_violation, "approximant amplitude 1 + (1-q)u^2/2 is not positive");
    return checked_result(std::exp((2.0 * q.q - 1.0) * complex_value{std::log(g), u}), "approx F^(2q-1)");
}

residual_sample kg_residual_sample(residual_family family, double x, double t, const kg_wave& w, q_parameter q)
{
    validate(w);
    const double inv_c2 = 1.0 / (w.c * w.c);
    const double mass_term = w.m * w.m * w.c * w.c / (w.hbar * w.hbar);
    switch (family) {
    case residual_family::exact:
        return make_residual({inv_c2 * exact_d2t_F(x, t, w, q), -exact_d2x_F(x, t, w, q),
                              q.q * mass_term * exact_F_2qm1(x, t, w, q)});
    case residual_family::approx:
        return make_residual({inv_c2 * d2t_approx_F(x, t, w, q), -d2x_approx_F(x, t, w, q),
                              q.q * mass_term * approx_F_raised_2qm1(x, t, w, q)});
    case residual_family::expansion:
        return make_residual({inv_c2 * d2t_approx_F(x, t, w, q), -d2x_approx_F(x, t, w, q),
                              mass_term * approx_qF2qm1(x, t, w, q)});
    }
    throw error(errc::invalid_parameter, "unknown residual family");
}

complex_value residual_kg(double x, double t, const kg_wave& w, q_parameter q, residual_family family)
{
    return kg_residual_sample(family, x, t, w, q).residual;
}

} // namespace qwave
