#include <qwave/separation.hpp>

#include <cmath>

namespace qwave {

namespace {

void validate_wave(const schrodinger_wave& w)
{
    require_finite(w.p, "p");
    require_finite(w.E, "E");
    require_finite(w.hbar, "hbar");
    if (!(w.m > 0.0))
        throw error(errc::invalid_parameter, "mass must be positive");
    if (!(w.hbar > 0.0))
        throw error(errc::invalid_parameter, "hbar must be positive");
}

/// E t / hbar, after validating the inputs of f.
double time_phase(double t, const schrodinger_wave& w, q_parameter q)
{
    validate_wave(w);
    require_finite(t, "t");
    require_finite(q.q, "q");
    if (q.q == 0.0)
        throw error(errc::invalid_q, "f(t) is undefined at q = 0");
    return w.E * t / w.hbar;
}

/// p x / hbar, after validating the inputs of g.
double space_phase(double x, const schrodinger_wave& w, q_parameter q)
{
    validate_wave(w);
    require_finite(x, "x");
    require_finite(q.q, "q");
    if (!(q.q > -1.0))
        throw error(errc::invalid_q, "g(x) requires q > -1");
    return w.p * x / w.hbar;
}

/// ln f = -ln e_q(i E t/(q hbar))
complex_value log_exact_f(double t, const schrodinger_wave& w, q_parameter q)
{
    const double tau = time_phase(t, w, q);
    return -q_log_exp(complex_value{0.0, tau / q.q}, q);
}

/// ln g = 2 ln e_q(i p x/(hbar sqrt(2(q+1))))
complex_value log_exact_g(double x, const schrodinger_wave& w, q_parameter q)
{
    const double v = space_phase(x, w, q);
    return 2.0 * q_log_exp(complex_value{0.0, v / std::sqrt(2.0 * (q.q + 1.0))}, q);
}

complex_value principal_log(complex_value h, const char* what)
{
    if (h.imag() == 0.0 && h.real() <= 0.0)
        throw error(errc::branch_cut_violation, what);
    return std::log(h);
}

/// 1 + (q-1)(i tau + tau^2/2)
complex_value f_amplitude(double tau, q_parameter q)
{
    const double eps = q.epsilon();
    return {1.0 + 0.5 * eps * tau * tau, eps * tau};
}

/// 1 + (1-q)/4 (i v + v^2)
complex_value g_amplitude(double v, q_parameter q)
{
    const double d = 0.25 * q.one_minus_q();
    return {1.0 + d * v * v, d * v};
}

} // namespace

complex_value exact_f(double t, const schrodinger_wave& w, q_parameter q)
{
    return checked_result(std::exp(log_exact_f(t, w, q)), "f(t)");
}

complex_value exact_f_q(double t, const schrodinger_wave& w, q_parameter q)
{
    return checked_result(std::exp(q.q * log_exact_f(t, w, q)), "f^q");
}

complex_value exact_dt_f_q(double t, const schrodinger_wave& w, q_parameter q)
{
    // d_t f^q = -(iE/hbar) f for every q
    return complex_value{0.0, -w.E / w.hbar} * exact_f(t, w, q);
}

complex_value approx_f(double t, const schrodinger_wave& w, q_parameter q)
{
    const double tau = time_phase(t, w, q);
    return std::exp(complex_value{0.0, -tau}) * f_amplitude(tau, q);
}

complex_value approx_f_q(double t, const schrodinger_wave& w, q_parameter q)
{
    const double tau = time_phase(t, w, q);
    return std::exp(complex_value{0.0, -tau}) * (1.0 + 0.5 * q.epsilon() * tau * tau);
}

complex_value dt_approx_f_q(double t, const schrodinger_wave& w, q_parameter q)
{
    const double tau = time_phase(t, w, q);
    return complex_value{0.0, -w.E / w.hbar} * std::exp(complex_value{0.0, -tau}) * f_amplitude(tau, q);
}

complex_value approx_f_raised_q(double t, const schrodinger_wave& w, q_parameter q)
{
    const double tau = time_phase(t, w, q);
    const complex_value log_h = principal_log(f_amplitude(tau, q), "approximant amplitude of f on the cut");
    return checked_result(std::exp(q.q * (complex_value{0.0, -tau} + log_h)), "approx f^q");
}

complex_value dt_approx_f_raised_q(double t, const schrodinger_wave& w, q_parameter q)
{
    // q f~^q (d_t f~)/f~, with f~ = e^{-i tau} h and d_tau h = (q-1)(i + tau)
    const double tau = time_phase(t, w, q);
    const double eps = q.epsilon();
    const complex_value h = f_amplitude(tau, q);
    const complex_value dh{eps * tau, eps};
    const complex_value log_derivative = (complex_value{0.0, -1.0} * h + dh) / h;
    return q.q * (w.E / w.hbar) * approx_f_raised_q(t, w, q) * log_derivative;
}

complex_value exact_g(double x, const schrodinger_wave& w, q_parameter q)
{
    return checked_result(std::exp(log_exact_g(x, w, q)), "g(x)");
}

complex_value exact_g_q(double x, const schrodinger_wave& w, q_parameter q)
{
    return checked_result(std::exp(q.q * log_exact_g(x, w, q)), "g^q");
}

complex_value exact_d2x_g(double x, const schrodinger_wave& w, q_parameter q)
{
    // d_xx g = -(p^2/hbar^2) g^q for every q
    const double k = w.p / w.hbar;
    return -(k * k) * exact_g_q(x, w, q);
}

complex_value approx_g(double x, const schrodinger_wave& w, q_parameter q)
{
    const double v = space_phase(x, w, q);
    return std::exp(complex_value{0.0, v}) * g_amplitude(v, q);
}

complex_value approx_g_q(double x, const schrodinger_wave& w, q_parameter q)
{
    const double v = space_phase(x, w, q);
    const double eps = q.epsilon();
    return std::exp(complex_value{0.0, v}) * complex_value{1.0 - 0.25 * eps * v * v, 0.75 * eps * v};
}

complex_value d2x_approx_g(double x, const schrodinger_wave& w, q_parameter q)
{
    const double v = space_phase(x, w, q);
    const double d = q.one_minus_q();
    const double k = w.p / w.hbar;
    return -(k * k) * std::exp(complex_value{0.0, v}) * complex_value{1.0 + 0.25 * d * v * v, -0.75 * d * v};
}

complex_value approx_g_raised_q(double x, const schrodinger_wave& w, q_parameter q)
{
    const double v = space_phase(x, w, q);
    const complex_value log_h = principal_log(g_amplitude(v, q), "approximant amplitude of g on the cut");
    return checked_result(std::exp(q.q * (complex_value{0.0, v} + log_h)), "approx g^q");
}

residual_sample f_residual_sample(residual_family family, double t, const schrodinger_wave& w,
                                  separation_constant lambda, q_parameter q)
{
    require_finite(lambda.lambda, "lambda");
    const complex_value ihbar{0.0, w.hbar};
    switch (family) {
    case residual_family::exact:
        return make_residual({ihbar * exact_dt_f_q(t, w, q), -lambda.lambda * exact_f(t, w, q)});
    case residual_family::approx:
        return make_residual({ihbar * dt_approx_f_raised_q(t, w, q), -lambda.lambda * approx_f(t, w, q)});
    case residual_family::expansion:
        return make_residual({ihbar * dt_approx_f_q(t, w, q), -lambda.lambda * approx_f(t, w, q)});
    }
    throw error(errc::invalid_parameter, "unknown residual family");
}

residual_sample g_residual_sample(residual_family family, double x, const schrodinger_wave& w,
                                  separation_constant lambda, q_parameter q)
{
    require_finite(lambda.lambda, "lambda");
    const double kinetic = -w.hbar * w.hbar / (2.0 * w.m);
    switch (family) {
    case residual_family::exact:
        return make_residual({kinetic * exact_d2x_g(x, w, q), -lambda.lambda * exact_g_q(x, w, q)});
    case residual_family::approx:
        return make_residual({kinetic * d2x_approx_g(x, w, q), -lambda.lambda * approx_g_raised_q(x, w, q)});
    case residual_family::expansion:
        return make_residual({kinetic * d2x_approx_g(x, w, q), -lambda.lambda * approx_g_q(x, w, q)});
    }
    throw error(errc::invalid_parameter, "unknown residual family");
}

complex_value residual_f(residual_family family, double t, const schrodinger_wave& w, separation_constant lambda,
                         q_parameter q)
{
    return f_residual_sample(family, t, w, lambda, q).residual;
}

complex_value residual_g(residual_family family, double x, const schrodinger_wave& w, separation_constant lambda,
                         q_parameter q)
{
    return g_residual_sample(family, x, w, lambda, q).residual;
}

} // namespace qwave
