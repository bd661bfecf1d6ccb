#include <qwave/verify.hpp>

#include <qwave/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace qwave {

namespace {

complex_value evaluate_on_stencil(const complex_function& fn, double x)
{
    complex_value v;
    try {
        v = fn(x);
    } catch (const std::exception& e) {
        throw error(errc::stencil_evaluation_failed, "evaluation at " + std::to_string(x) + " failed: " + e.what());
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw error(errc::stencil_evaluation_failed, "non-finite value at " + std::to_string(x));
    return v;
}

complex_value central_difference(const complex_function& fn, double a, double h, int order, int derivative)
{
    const auto f = [&](double offset) { return evaluate_on_stencil(fn, a + offset * h); };
    if (derivative == 1) {
        if (order == 2)
            return (f(1) - f(-1)) / (2.0 * h);
        return (f(-2) - 8.0 * f(-1) + 8.0 * f(1) - f(2)) / (12.0 * h);
    }
    if (order == 2)
        return (f(1) - 2.0 * f(0) + f(-1)) / (h * h);
    return (-f(2) + 16.0 * f(1) - 30.0 * f(0) + 16.0 * f(-1) - f(-2)) / (12.0 * h * h);
}

} // namespace

fd_result fd_derivative(const complex_function& fn, double at, const fd_scheme& scheme, int derivative)
{
    if (!(scheme.step > 0.0) || !std::isfinite(scheme.step))
        throw error(errc::invalid_parameter, "finite-difference step must be positive");
    if (scheme.order != 2 && scheme.order != 4)
        throw error(errc::invalid_parameter, "finite-difference order must be 2 or 4");
    if (scheme.richardson_levels < 0 || scheme.richardson_levels > 8)
        throw error(errc::invalid_parameter, "richardson_levels must be in [0, 8]");
    if (derivative != 1 && derivative != 2)
        throw error(errc::invalid_parameter, "only first and second derivatives are supported");
    require_finite(at, "evaluation point");

    const int levels = scheme.richardson_levels;
    const int rows = std::max(levels, 1) + 1;
    // tableau[i][j]: step h/2^i, j eliminations of the leading error terms
    std::vector<std::vector<complex_value>> tableau(rows);
    for (int i = 0; i < rows; ++i) {
        const double h = std::ldexp(scheme.step, -i);
        tableau[i].push_back(central_difference(fn, at, h, scheme.order, derivative));
        for (int j = 1; j <= i && j <= levels; ++j) {
            const double factor = std::ldexp(1.0, scheme.order + 2 * (j - 1)) - 1.0;
            tableau[i].push_back(tableau[i][j - 1] + (tableau[i][j - 1] - tableau[i - 1][j - 1]) / factor);
        }
    }

    if (levels == 0) {
        const double gain = std::ldexp(1.0, scheme.order);
        return {tableau[0][0], std::abs(tableau[0][0] - tableau[1][0]) * gain / (gain - 1.0)};
    }
    const auto& last = tableau[levels];
    return {last[levels], std::abs(last[levels] - last[levels - 1])};
}

fd_result fd_q_derivative(const std::function<complex_value(q_parameter)>& fn, const fd_scheme& scheme)
{
    return fd_derivative([&](double q) { return fn(q_parameter{q}); }, 1.0, scheme, 1);
}

bool order_fit::identically_zero() const
{
    return std::isinf(slope) && slope > 0.0;
}

std::vector<double> default_epsilon_ladder()
{
    return {1e-2, std::pow(10.0, -2.5), 1e-3, std::pow(10.0, -3.5), 1e-4};
}

order_fit order_of_convergence(const std::function<double(double)>& residual_norm, std::span<const double> epsilons)
{
    if (epsilons.size() < 3)
        throw error(errc::invalid_parameter, "an order fit needs at least three epsilons");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (!(epsilons[i] > 0.0) || !std::isfinite(epsilons[i]))
            throw error(errc::invalid_parameter, "epsilons must be positive and finite");
        if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
            throw error(errc::invalid_parameter, "epsilons must be strictly decreasing");
    }
    if (std::log10(epsilons.front() / epsilons.back()) < 2.0 - 1e-9)
        throw error(errc::invalid_parameter, "epsilons must span at least two decades");

    order_fit fit;
    fit.epsilons.assign(epsilons.begin(), epsilons.end());
    for (double eps : epsilons)
        fit.residual_norms.push_back(residual_norm(eps));

    const auto& norms = fit.residual_norms;
    if (std::all_of(norms.begin(), norms.end(), [](double n) { return n == 0.0; })) {
        fit.slope = std::numeric_limits<double>::infinity();
        fit.r_squared = 1.0;
        return fit;
    }
    for (double n : norms)
        if (!(n > 0.0) || !std::isfinite(n))
            throw error(errc::degenerate_fit, "residual norms must be positive and finite, got " + std::to_string(n));

    const std::size_t count = norms.size();
    std::vector<double> lx(count), ly(count);
    for (std::size_t i = 0; i < count; ++i) {
        lx[i] = std::log(epsilons[i]);
        ly[i] = std::log(norms[i]);
    }
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / count;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / count;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    fit.slope = sxy / sxx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double r = ly[i] - (my + fit.slope * (lx[i] - mx));
        ss_res += r * r;
    }
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

double grid_2d::x(std::size_t i) const
{
    return nx == 1 ? x_min : std::lerp(x_min, x_max, static_cast<double>(i) / static_cast<double>(nx - 1));
}

double grid_2d::t(std::size_t j) const
{
    return nt == 1 ? t_min : std::lerp(t_min, t_max, static_cast<double>(j) / static_cast<double>(nt - 1));
}

residual_report grid_residual(const residual_function& fn, const grid_2d& grid, unsigned workers)
{
    if (grid.nx == 0 || grid.nt == 0)
        throw error(errc::invalid_parameter, "grid must have at least one point per axis");
    require_finite(grid.x_min, "x_min");
    require_finite(grid.x_max, "x_max");
    require_finite(grid.t_min, "t_min");
    require_finite(grid.t_max, "t_max");

    std::vector<residual_sample> samples(grid.size());
    parallel_for(samples.size(), workers, [&](std::size_t k) {
        samples[k] = fn(grid.x(k % grid.nx), grid.t(k / grid.nx));
    });

    residual_report report;
    report.nx = grid.nx;
    report.nt = grid.nt;
    report.argmax_x = grid.x(0);
    report.argmax_t = grid.t(0);
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const double a = std::abs(samples[k].residual);
        if (!std::isfinite(a))
            throw error(errc::non_finite_result, "residual is not finite on the grid");
        if (a > report.max_abs) {
            report.max_abs = a;
            report.argmax_x = grid.x(k % grid.nx);
            report.argmax_t = grid.t(k / grid.nx);
        }
        report.max_rel = std::max(report.max_rel, samples[k].relative());
    }
    return report;
}

double relative_error(complex_value a, complex_value b, double floor)
{
    const double denom = std::max(std::abs(b), floor);
    const double diff = std::abs(a - b);
    return denom > 0.0 ? diff / denom : diff;
}

} // namespace qwave
