#include <qwave/planewave.hpp>

#include <cmath>

namespace qwave {

namespace {

void validate(const schrodinger_wave& w)
{
    require_finite(w.p, "p");
    require_finite(w.E, "E");
    require_finite(w.m, "m");
    require_finite(w.hbar, "hbar");
    if (!(w.m > 0.0))
        throw error(errc::invalid_parameter, "mass must be positive");
    if (!(w.hbar > 0.0))
        throw error(errc::invalid_parameter, "hbar must be positive");
}

double checked_phase(phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    validate(w);
    require_finite(pt.x, "x");
    require_finite(pt.t, "t");
    require_finite(q.q, "q");
    return w.phase(pt.x, pt.t);
}

complex_value unit_phase(double u) { return std::exp(complex_value{0.0, u}); }

/// log of the approximant's real amplitude 1 + (1-q) u^2/2, which must stay positive.
double approx_log_amplitude(double u, q_parameter q)
{
    const double g = 1.0 + 0.5 * q.one_minus_q() * u * u;
    if (!(g > 0.0))
        throw error(errc::branch_cut_violation, "approximant amplitude 1 + (1-q)u^2/2 is not positive");
    return std::log(g);
}

} // namespace

schrodinger_wave schrodinger_wave::free(double p, double m, double hbar)
{
    schrodinger_wave w{p, p * p / (2.0 * m), m, hbar, true};
    validate(w);
    return w;
}

schrodinger_wave schrodinger_wave::with_energy(double p, double E, double m, double hbar)
{
    schrodinger_wave w{p, E, m, hbar, false};
    validate(w);
    return w;
}

complex_value exact_psi(phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    const double u = checked_phase(pt, w, q);
    return q_exp(complex_value{0.0, u}, q);
}

complex_value exact_psi_q(phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    const double u = checked_phase(pt, w, q);
    return checked_result(std::exp(q.q * q_log_exp(complex_value{0.0, u}, q)), "psi^q");
}

complex_value exact_dx_psi(phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    // (ip/hbar) [1+(1-q)z]^{q/(1-q)}
    return complex_value{0.0, w.p / w.hbar} * exact_psi_q(pt, w, q);
}

namespace {

/// [1+(1-q)z]^{(2q-1)/(1-q)}
complex_value exact_power_2q_minus_1(phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    const double u = checked_phase(pt, w, q);
    return checked_result(std::exp((2.0 * q.q - 1.0) * q_log_exp(complex_value{0.0, u}, q)), "psi^(2q-1)");
}

} // namespace

complex_value exact_d2x_psi(phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    const double k = w.p / w.hbar;
    return -(q.q * k * k) * exact_power_2q_minus_1(pt, w, q);
}

complex_value exact_dt_psi_q(phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    return complex_value{0.0, -q.q * w.E / w.hbar} * exact_power_2q_minus_1(pt, w, q);
}

complex_value approx_psi(phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    const double u = checked_phase(pt, w, q);
    return unit_phase(u) * (1.0 + 0.5 * q.one_minus_q() * u * u);
}

complex_value approx_psi_q(phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    const double u = checked_phase(pt, w, q);
    const double eps = q.epsilon();
    return unit_phase(u) * complex_value{1.0 - 0.5 * eps * u * u, eps * u};
}

complex_value d2x_approx_psi(phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    const double u = checked_phase(pt, w, q);
    const double k = w.p / w.hbar;
    return -(k * k) * unit_phase(u) * first_order_bracket(u, q);
}

complex_value dt_approx_psi_q(phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    const double u = checked_phase(pt, w, q);
    return complex_value{0.0, -w.E / w.hbar} * unit_phase(u) * first_order_bracket(u, q);
}

complex_value approx_psi_raised_q(phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    const double u = checked_phase(pt, w, q);
    return checked_result(std::exp(q.q * complex_value{approx_log_amplitude(u, q), u}), "approx psi^q");
}

complex_value dt_approx_psi_raised_q(phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    // q psi~^(q-1) d_t psi~ with psi~ = e^{iu} g, g = 1 + (1-q)u^2/2
    const double u = checked_phase(pt, w, q);
    const double g = 1.0 + 0.5 * q.one_minus_q() * u * u;
    const complex_value raised = approx_psi_raised_q(pt, w, q);
    return -(q.q * w.E / w.hbar) * (raised / g) * complex_value{q.one_minus_q() * u, g};
}

residual_sample schrodinger_residual_sample(residual_family family, phase_point pt, const schrodinger_wave& w,
                                            q_parameter q)
{
    const complex_value ihbar{0.0, w.hbar};
    const double kinetic = w.hbar * w.hbar / (2.0 * w.m);
    switch (family) {
    case residual_family::exact:
        return make_residual({ihbar * exact_dt_psi_q(pt, w, q), kinetic * exact_d2x_psi(pt, w, q)});
    case residual_family::approx:
        return make_residual({ihbar * dt_approx_psi_raised_q(pt, w, q), kinetic * d2x_approx_psi(pt, w, q)});
    case residual_family::expansion:
        return make_residual({ihbar * dt_approx_psi_q(pt, w, q), kinetic * d2x_approx_psi(pt, w, q)});
    }
    throw error(errc::invalid_parameter, "unknown residual family");
}

complex_value residual_schrodinger(residual_family family, phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    return schrodinger_residual_sample(family, pt, w, q).residual;
}

double ratio_R(phase_point pt, const schrodinger_wave& w, q_parameter q)
{
    const complex_value exact = exact_psi(pt, w, q);
    if (exact == complex_value{})
        throw error(errc::division_by_zero, "exact plane wave underflows to zero");
    const double r = std::abs(approx_psi(pt, w, q)) / std::abs(exact);
    if (!std::isfinite(r))
        throw error(errc::non_finite_result, "ratio R is not representable");
    return r;
}

} // namespace qwave
