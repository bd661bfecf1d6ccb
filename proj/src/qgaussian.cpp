#include <qwave/qgaussian.hpp>

#include <cmath>

namespace qwave {

namespace {

void validate(const gaussian_params& p)
{
    require_finite(p.m, "m");
    require_finite(p.beta, "beta");
    require_finite(p.hbar, "hbar");
    require_finite(p.q.q, "q");
    if (!(p.m > 0.0))
        throw error(errc::invalid_parameter, "mass must be positive");
    if (p.beta == 0.0)
        throw error(errc::invalid_parameter, "beta must be non-zero");
    if (!(p.hbar > 0.0))
        throw error(errc::invalid_parameter, "hbar must be positive");
    if (!(p.q.q > -1.0) || p.q.q == 0.0)
        throw error(errc::invalid_q, "the q-Gaussian needs q > -1 and q != 0");
}

} // namespace

gaussian_coeffs coeffs_exact(double t, const gaussian_params& params)
{
    validate(params);
    require_finite(t, "t");
    const double q = params.q.q;
    const double eps = params.q.epsilon();
    const complex_value g{1.0, params.hbar * (q + 1.0) * t};
    const double kappa = 1.0 / (4.0 * params.m * q * params.beta * params.beta);

    // (G^{eps/(q+1)} - 1)/eps via expm1 of the scaled logarithm
    const complex_value y = std::log(g) / (q + 1.0);
    const complex_value growth = eps == 0.0 ? y : expm1(eps * y) / eps;

    gaussian_coeffs k;
    k.a = params.m * q / g;
    k.b = 1.0 / (params.beta * g);
    k.c = growth - kappa * std::exp(eps * y) + kappa / g;
    return k;
}

gaussian_coeff_jet coeffs_first_order(double t, const gaussian_params& params)
{
    validate(params);
    require_finite(t, "t");
    const double m = params.m;
    const double beta2 = params.beta * params.beta;
    const complex_value iht{0.0, params.hbar * t};
    const complex_value d = 1.0 + 2.0 * iht;
    const complex_value d2 = d * d;
    const complex_value ln_d = std::log(d);

    gaussian_coeff_jet j;
    j.a1 = m / d;
    j.a2 = m * (1.0 + iht) / d2;
    j.b1 = 1.0 / (params.beta * d);
    j.b2 = -iht / (params.beta * d2);
    j.c1 = 0.5 * ln_d - iht / (2.0 * m * beta2 * d);
    j.c2 = 1.0 / (4.0 * m * beta2) + iht / (2.0 * d) - (1.0 + 3.0 * iht) / (4.0 * m * beta2 * d2)
           + ln_d * ln_d / 8.0 - (1.0 + 2.0 * m * beta2) / (8.0 * m * beta2) * ln_d;
    return j;
}

gaussian_coeff_jet coeffs_jet(double t, const gaussian_params& params)
{
    validate(params);
    require_finite(t, "t");
    const q_jet q = jet_q();
    const complex_value iht{0.0, params.hbar * t};
    const q_jet g = 1.0 + iht * (q + 1.0);
    const q_jet inv_g = jet_reciprocal(g);
    const q_jet kappa = complex_value{1.0 / (4.0 * params.m * params.beta * params.beta)} * jet_reciprocal(q);

    // Y = ln G/(q+1); G^{eps/(q+1)} = e^{eps Y} = 1 + eps Y0 + O(eps^2)
    const q_jet y = jet_ln(g) / (q + 1.0);
    const q_jet growth{y.v0, y.v1 + 0.5 * y.v0 * y.v0};
    const q_jet power{1.0, y.v0};

    const q_jet a = complex_value{params.m} * q * inv_g;
    const q_jet b = complex_value{1.0 / params.beta} * inv_g;
    const q_jet c = growth - kappa * power + kappa * inv_g;
    return {a.v0, a.v1, b.v0, b.v1, c.v0, c.v1};
}

q_jet qgaussian_jet(double x, double t, const gaussian_params& params)
{
    require_finite(x, "x");
    const gaussian_coeff_jet j = coeffs_jet(t, params);
    const q_jet poly{j.leading().polynomial(x), j.correction().polynomial(x)};
    return q_exp_jet(-poly);
}

complex_value exact_qgaussian(double x, double t, const gaussian_params& params)
{
    require_finite(x, "x");
    return q_exp(-coeffs_exact(t, params).polynomial(x), params.q);
}

complex_value exact_qgaussian_q(double x, double t, const gaussian_params& params)
{
    require_finite(x, "x");
    const complex_value log_psi = q_log_exp(-coeffs_exact(t, params).polynomial(x), params.q);
    return checked_result(std::exp(params.q.q * log_psi), "psi^q");
}

namespace {

struct approx_parts {
    complex_value leading;   // a1 x^2 + b1 x + c1
    complex_value amplitude; // 1 - (q-1)[P2 - P1^2/2]
};

approx_parts approx_decomposition(double x, double t, const gaussian_params& params)
{
    require_finite(x, "x");
    const gaussian_coeff_jet j = coeffs_first_order(t, params);
    const complex_value p1 = j.leading().polynomial(x);
    const complex_value p2 = j.correction().polynomial(x);
    return {p1, 1.0 - params.q.epsilon() * (p2 - 0.5 * p1 * p1)};
}

} // namespace

complex_value approx_qgaussian(double x, double t, const gaussian_params& params)
{
    const approx_parts parts = approx_decomposition(x, t, params);
    return checked_result(parts.amplitude * std::exp(-parts.leading), "approximate q-Gaussian");
}

complex_value approx_qgaussian_raised_q(double x, double t, const gaussian_params& params)
{
    const approx_parts parts = approx_decomposition(x, t, params);
    if (parts.amplitude.imag() == 0.0 && parts.amplitude.real() <= 0.0)
        throw error(errc::branch_cut_violation, "approximant amplitude on the negative real axis");
    return checked_result(std::exp(params.q.q * (std::log(parts.amplitude) - parts.leading)),
                          "approximate q-Gaussian^q");
}

double ratio_gaussian(double x, double t, const gaussian_params& params)
{
    const complex_value exact = exact_qgaussian(x, t, params);
    if (exact == complex_value{})
        throw error(errc::division_by_zero, "exact q-Gaussian underflows to zero");
    const double r = std::abs(approx_qgaussian(x, t, params)) / std::abs(exact);
    if (!std::isfinite(r))
        throw error(errc::non_finite_result, "q-Gaussian ratio is not representable");
    return r;
}

gaussian_residual qgaussian_residual_sample(double x, double t, const gaussian_params& params,
                                            const fd_scheme& scheme, residual_family family,
                                            double max_rel_fd_error)
{
    complex_function psi_of_x;
    complex_function power_of_t;
    switch (family) {
    case residual_family::exact:
        psi_of_x = [&](double xs) { return exact_qgaussian(xs, t, params); };
        power_of_t = [&](double ts) { return exact_qgaussian_q(x, ts, params); };
        break;
    case residual_family::approx:
        psi_of_x = [&](double xs) { return approx_qgaussian(xs, t, params); };
        power_of_t = [&](double ts) { return approx_qgaussian_raised_q(x, ts, params); };
        break;
    case residual_family::expansion:
        throw error(errc::invalid_parameter, "the q-Gaussian residual supports the exact and approx families");
    }

    const fd_result d2x = fd_derivative(psi_of_x, x, scheme, 2);
    const fd_result dt = fd_derivative(power_of_t, t, scheme, 1);
    const double kinetic = params.hbar * params.hbar / (2.0 * params.m);

    gaussian_residual out;
    out.sample = make_residual({complex_value{0.0, params.hbar} * dt.value, kinetic * d2x.value});
    out.fd_error = params.hbar * dt.error_estimate + kinetic * d2x.error_estimate;
    if (out.fd_error > max_rel_fd_error * out.sample.scale)
        throw error(errc::step_too_coarse, "finite-difference error estimate " + std::to_string(out.fd_error)
                                               + " exceeds tolerance at x=" + std::to_string(x));
    return out;
}

complex_value residual_qgaussian(double x, double t, const gaussian_params& params, const fd_scheme& scheme,
                                 residual_family family)
{
    return qgaussian_residual_sample(x, t, params, scheme, family).sample.residual;
}

} // namespace qwave
