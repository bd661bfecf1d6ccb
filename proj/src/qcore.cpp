#include <qwave/qcore.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace qwave {

void require_finite(complex_value z, const char* what)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw error(errc::non_finite_input, std::string(what) + " is not finite");
}

void require_finite(double v, const char* what)
{
    if (!std::isfinite(v))
        throw error(errc::non_finite_input, std::string(what) + " is not finite");
}

complex_value checked_result(complex_value z, const char* what)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw error(errc::non_finite_result, std::string(what) + " overflowed or is undefined");
    return z;
}

q_jet jet_reciprocal(const q_jet& a)
{
    if (a.v0 == complex_value{})
        throw error(errc::division_by_zero_jet, "reciprocal of a jet with zero value");
    const complex_value r = 1.0 / a.v0;
    return {r, -a.v1 * r * r};
}

q_jet operator/(const q_jet& a, const q_jet& b) { return a * jet_reciprocal(b); }

q_jet jet_exp(const q_jet& a)
{
    const complex_value e = std::exp(a.v0);
    return {e, a.v1 * e};
}

q_jet jet_ln(const q_jet& a, int sheet)
{
    if (a.v0 == complex_value{})
        throw error(errc::division_by_zero_jet, "logarithm of a jet with zero value");
    if (sheet == 0 && a.v0.imag() == 0.0 && a.v0.real() < 0.0)
        throw error(errc::branch_cut_violation, "jet value on the negative real axis");
    const complex_value shift{0.0, 2.0 * std::numbers::pi * sheet};
    return {std::log(a.v0) + shift, a.v1 / a.v0};
}

q_jet jet_pow_linear(const q_jet& a, double alpha, double beta, int sheet)
{
    return jet_exp(q_jet{alpha, beta} * jet_ln(a, sheet));
}

int nearest_sheet(complex_value v, double target_phase)
{
    return static_cast<int>(std::lround((target_phase - std::arg(v)) / (2.0 * std::numbers::pi)));
}

bool on_log1p_cut(complex_value w) noexcept
{
    const complex_value one_plus = 1.0 + w;
    return one_plus.imag() == 0.0 && one_plus.real() <= 0.0;
}

complex_value log1p(complex_value w)
{
    if (std::abs(w) > 0.5)
        return std::log(1.0 + w);
    const double a = w.real();
    const double b = w.imag();
    // |1+w|^2 - 1 = a(2+a) + b^2
    return {0.5 * std::log1p(a * (2.0 + a) + b * b), std::atan2(b, 1.0 + a)};
}

complex_value expm1(complex_value z)
{
    const double x = z.real();
    const double y = z.imag();
    const double s = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

complex_value stable_log1p_over_w(complex_value w)
{
    require_finite(w, "w");
    if (on_log1p_cut(w))
        throw error(errc::branch_cut_violation, "1 + w lies on the negative real axis");
    if (w == complex_value{})
        return 1.0;
    if (std::abs(w) < log1p_series_radius) {
        // sum_{n<8} (-w)^n/(n+1); the dropped tail is below |w|^8/9 < 1e-32
        complex_value s = -1.0 / 8.0;
        for (int n = 6; n >= 0; --n)
            s = (n % 2 == 0 ? 1.0 : -1.0) / (n + 1.0) + w * s;
        return s;
    }
    return log1p(w) / w;
}

namespace {

/// d/dw [log1p(w)/w]
complex_value log1p_over_w_derivative(complex_value w)
{
    if (std::abs(w) < 0.1) {
        // sum_{n>=1} (-1)^n n w^(n-1)/(n+1), 40 terms
        complex_value s = 0.0;
        for (int n = 40; n >= 1; --n)
            s = (n % 2 == 0 ? 1.0 : -1.0) * n / (n + 1.0) + w * s;
        return s;
    }
    return (w / (1.0 + w) - log1p(w)) / (w * w);
}

} // namespace

q_jet jet_log1p_over_w(const q_jet& w)
{
    return {stable_log1p_over_w(w.v0), log1p_over_w_derivative(w.v0) * w.v1};
}

complex_value q_log_exp(complex_value z, q_parameter q, q_exp_path path)
{
    require_finite(z, "z");
    require_finite(q.q, "q");
    if (q.q == 1.0)
        return z;
    const complex_value w = q.one_minus_q() * z;
    if (on_log1p_cut(w))
        throw error(errc::branch_cut_violation, "1 + (1-q) z lies on the negative real axis");
    if (path == q_exp_path::direct)
        return z * (log1p(w) / w);
    return z * stable_log1p_over_w(w);
}

complex_value q_exp(complex_value z, q_parameter q, q_exp_path path)
{
    if (q.q == 1.0) {
        require_finite(z, "z");
        return checked_result(std::exp(z), "e_q(z)");
    }
    return checked_result(std::exp(q_log_exp(z, q, path)), "e_q(z)");
}

q_jet q_log_exp_jet(const q_jet& z)
{
    require_finite(z.v0, "z");
    require_finite(z.v1, "dz/dq");
    // w = (1-q) z vanishes at q = 1
    const q_jet w = -(jet_epsilon() * z);
    return z * jet_log1p_over_w(w);
}

q_jet q_exp_jet(complex_value z) { return q_exp_jet(jet_constant(z)); }

q_jet q_exp_jet(const q_jet& z) { return jet_exp(q_log_exp_jet(z)); }

complex_value first_order_bracket(double u, q_parameter q)
{
    const double eps = q.epsilon();
    return {q.q - 0.5 * eps * u * u, 2.0 * eps * u};
}

} // namespace qwave
