#include <qwave/suites.hpp>

#include <qwave/kleingordon.hpp>
#include <qwave/planewave.hpp>
#include <qwave/qgaussian.hpp>
#include <qwave/scenarios.hpp>
#include <qwave/separation.hpp>
#include <qwave/verify.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace qwave {

namespace {

constexpr double tiny = std::numeric_limits<double>::min();

using q_function = std::function<complex_value(double, q_parameter)>;

std::vector<double> linspace(double a, double b, std::size_t n)
{
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = n == 1 ? a : std::lerp(a, b, static_cast<double>(i) / static_cast<double>(n - 1));
    return v;
}

class runner {
public:
    runner(std::string suite, const suite_options& options, std::vector<check_row>& rows)
        : suite_(std::move(suite)), options_(options), rows_(rows)
    {
        if (options.q_minus_1) {
            qs_.push_back(q_parameter::from_epsilon(*options.q_minus_1));
            trivial_ = *options.q_minus_1 == 0.0;
        } else {
            qs_ = {q_parameter{1.0 - 1e-3}, q_parameter{1.0 + 1e-3}, q_parameter{1.1}};
        }
    }

    [[nodiscard]] bool trivial() const { return trivial_; }
    [[nodiscard]] const std::vector<q_parameter>& qs() const { return qs_; }
    [[nodiscard]] unsigned workers() const { return options_.workers; }

    void add(std::string claim, const std::string& key, double measured, comparison cmp = comparison::at_most)
    {
        const auto over = options_.tolerances.find(key);
        const double tol = over != options_.tolerances.end() ? over->second : default_tolerances().at(key);
        rows_.push_back({suite_, std::move(claim), key, measured, tol, cmp});
    }

    /// Largest max_rel of grid_residual over the configured q values.
    double grid_max_rel(const std::function<residual_sample(double, double, q_parameter)>& fn, const grid_2d& grid)
    {
        double worst = 0.0;
        for (const q_parameter q : qs_) {
            const auto report = grid_residual([&](double x, double t) { return fn(x, t, q); }, grid, workers());
            worst = std::max(worst, report.max_rel);
        }
        return worst;
    }

    /// Analytic derivative against the Richardson finite difference of fn, over points and q values.
    double fd_mismatch(const std::vector<double>& points, const q_function& fn, const q_function& analytic,
                       int derivative)
    {
        double worst = 0.0;
        for (const q_parameter q : qs_) {
            for (double s : points) {
                const fd_result d = fd_derivative([&](double v) { return fn(v, q); }, s, fd_scheme{}, derivative);
                worst = std::max(worst, relative_error(d.value, analytic(s, q), tiny));
            }
        }
        return worst;
    }

    /// Slope and r^2 of the approximant residual norm against q - 1.
    void order_rows(const std::string& what, const std::function<double(q_parameter)>& norm)
    {
        if (trivial_)
            return;
        const auto ladder = default_epsilon_ladder();
        const order_fit fit = order_of_convergence(
            [&](double eps) { return norm(q_parameter::from_epsilon(eps)); }, ladder);
        add(what + ": residual order in q-1", "order_slope", fit.slope, comparison::at_least);
        add(what + ": order fit r^2", "order_r2", fit.r_squared, comparison::at_least);
    }

private:
    std::string suite_;
    const suite_options& options_;
    std::vector<check_row>& rows_;
    std::vector<q_parameter> qs_;
    bool trivial_ = false;
};

/// First-order coefficient of an approximant (linear in q) against d/dq of
/// the exact form at q = 1, relative to the larger of the coefficient and
/// the zeroth-order term.
double coefficient_mismatch(const std::vector<double>& points, const q_function& exact, const q_function& approx)
{
    double worst = 0.0;
    for (double s : points) {
        const complex_value zeroth = approx(s, q_parameter{1.0});
        const complex_value coef = approx(s, q_parameter{2.0}) - zeroth;
        const fd_result ref = fd_q_derivative([&](q_parameter q) { return exact(s, q); });
        const double denom = std::max({std::abs(ref.value), std::abs(zeroth), tiny});
        worst = std::max(worst, std::abs(coef - ref.value) / denom);
    }
    return worst;
}

double max_abs_over(const std::vector<double>& xs, const std::vector<double>& ts,
                    const std::function<complex_value(double, double)>& fn)
{
    double worst = 0.0;
    for (double t : ts)
        for (double x : xs)
            worst = std::max(worst, std::abs(fn(x, t)));
    return worst;
}

void planewave_suite(runner& r)
{
    const schrodinger_wave w = schrodinger_wave::free(1.0, 1.0);
    const grid_2d grid{-10.0, 10.0, 2001, 0.0, 1.0, 11};
    const auto sample = [&](residual_family f) {
        return [&, f](double x, double t, q_parameter q) { return schrodinger_residual_sample(f, {x, t}, w, q); };
    };

    r.add("exact plane wave residual, 2001x11 grid", "exact_residual",
          r.grid_max_rel(sample(residual_family::exact), grid));
    r.add("first-order residual coefficient (expansion family)", "expansion_residual",
          r.grid_max_rel(sample(residual_family::expansion), grid));

    const auto xs = linspace(-2.0, 2.0, 41);
    const auto ts = linspace(0.0, 1.0, 5);
    r.order_rows("plane wave", [&](q_parameter q) {
        return max_abs_over(xs, ts, [&](double x, double t) {
            return residual_schrodinger(residual_family::approx, {x, t}, w, q);
        });
    });

    const double t0 = 0.25;
    const double x0 = 0.7;
    const auto us = linspace(-10.0, 10.0, 21);
    const auto small = linspace(-3.0, 3.0, 13);
    const auto in_x = [&](auto fn) { return [=, &w](double x, q_parameter q) { return fn({x, t0}, w, q); }; };
    const auto in_t = [&](auto fn) { return [=, &w](double t, q_parameter q) { return fn({x0, t}, w, q); }; };

    r.add("d/dx psi vs finite differences", "derivative_fd",
          r.fd_mismatch(us, in_x(exact_psi), in_x(exact_dx_psi), 1));
    r.add("d2/dx2 psi vs finite differences", "derivative_fd",
          r.fd_mismatch(us, in_x(exact_psi), in_x(exact_d2x_psi), 2));
    r.add("d/dt psi^q vs finite differences", "derivative_fd",
          r.fd_mismatch(us, in_t(exact_psi_q), in_t(exact_dt_psi_q), 1));
    r.add("d2/dx2 of the approximant vs finite differences", "derivative_fd",
          r.fd_mismatch(us, in_x(approx_psi), in_x(d2x_approx_psi), 2));
    r.add("d/dt of the expanded psi^q vs finite differences", "derivative_fd",
          r.fd_mismatch(us, in_t(approx_psi_q), in_t(dt_approx_psi_q), 1));
    r.add("d/dt of the approximant raised to q vs finite differences", "derivative_fd",
          r.fd_mismatch(small, in_t(approx_psi_raised_q), in_t(dt_approx_psi_raised_q), 1));

    if (r.trivial())
        return;
    r.add("q-1 coefficient of psi vs d/dq", "coefficient_fd_q", coefficient_mismatch(us, in_x(exact_psi), in_x(approx_psi)));
    r.add("q-1 coefficient of psi^q vs d/dq", "coefficient_fd_q",
          coefficient_mismatch(us, in_x(exact_psi_q), in_x(approx_psi_q)));
    r.add("q-1 coefficient of d2/dx2 psi vs d/dq", "coefficient_fd_q",
          coefficient_mismatch(us, in_x(exact_d2x_psi), in_x(d2x_approx_psi)));
    r.add("q-1 coefficient of d/dt psi^q vs d/dq", "coefficient_fd_q",
          coefficient_mismatch(us, in_x(exact_dt_psi_q), in_x(dt_approx_psi_q)));
}

void separation_suite(runner& r)
{
    const schrodinger_wave w = schrodinger_wave::free(1.0, 1.0);
    const separation_constant lambda = separation_constant::free_particle(w);
    const grid_2d f_grid{0.0, 0.0, 1, -20.0, 20.0, 2001};
    const grid_2d g_grid{-10.0, 10.0, 2001, 0.0, 0.0, 1};
    const auto f_sample = [&](residual_family f) {
        return [&, f](double, double t, q_parameter q) { return f_residual_sample(f, t, w, lambda, q); };
    };
    const auto g_sample = [&](residual_family f) {
        return [&, f](double x, double, q_parameter q) { return g_residual_sample(f, x, w, lambda, q); };
    };

    r.add("exact f(t) residual", "exact_residual", r.grid_max_rel(f_sample(residual_family::exact), f_grid));
    r.add("exact g(x) residual", "exact_residual", r.grid_max_rel(g_sample(residual_family::exact), g_grid));
    r.add("first-order coefficient of the f(t) residual", "expansion_residual",
          r.grid_max_rel(f_sample(residual_family::expansion), f_grid));
    r.add("first-order coefficient of the g(x) residual", "expansion_residual",
          r.grid_max_rel(g_sample(residual_family::expansion), g_grid));

    const auto ts = linspace(-4.0, 4.0, 41);
    const auto xs = linspace(-2.0, 2.0, 41);
    r.order_rows("f(t)", [&](q_parameter q) {
        double worst = 0.0;
        for (double t : ts)
            worst = std::max(worst, std::abs(residual_f(residual_family::approx, t, w, lambda, q)));
        return worst;
    });
    r.order_rows("g(x)", [&](q_parameter q) {
        double worst = 0.0;
        for (double x : xs)
            worst = std::max(worst, std::abs(residual_g(residual_family::approx, x, w, lambda, q)));
        return worst;
    });

    const auto taus = linspace(-20.0, 20.0, 21);
    const auto vs = linspace(-10.0, 10.0, 21);
    const auto small = linspace(-6.0, 6.0, 13);
    const auto bind = [&](auto fn) { return [=, &w](double s, q_parameter q) { return fn(s, w, q); }; };

    r.add("d/dt f^q vs finite differences", "derivative_fd", r.fd_mismatch(taus, bind(exact_f_q), bind(exact_dt_f_q), 1));
    r.add("d2/dx2 g vs finite differences", "derivative_fd", r.fd_mismatch(vs, bind(exact_g), bind(exact_d2x_g), 2));
    r.add("d/dt of the expanded f^q vs finite differences", "derivative_fd",
          r.fd_mismatch(taus, bind(approx_f_q), bind(dt_approx_f_q), 1));
    r.add("d2/dx2 of the g approximant vs finite differences", "derivative_fd",
          r.fd_mismatch(vs, bind(approx_g), bind(d2x_approx_g), 2));
    r.add("d/dt of the f approximant raised to q vs finite differences", "derivative_fd",
          r.fd_mismatch(small, bind(approx_f_raised_q), bind(dt_approx_f_raised_q), 1));

    if (r.trivial())
        return;
    r.add("q-1 coefficient of f vs d/dq", "coefficient_fd_q", coefficient_mismatch(taus, bind(exact_f), bind(approx_f)));
    r.add("q-1 coefficient of f^q vs d/dq", "coefficient_fd_q",
          coefficient_mismatch(taus, bind(exact_f_q), bind(approx_f_q)));
    r.add("q-1 coefficient of d/dt f^q vs d/dq", "coefficient_fd_q",
          coefficient_mismatch(taus, bind(exact_dt_f_q), bind(dt_approx_f_q)));
    r.add("q-1 coefficient of g vs d/dq", "coefficient_fd_q", coefficient_mismatch(vs, bind(exact_g), bind(approx_g)));
    r.add("q-1 coefficient of g^q vs d/dq", "coefficient_fd_q",
          coefficient_mismatch(vs, bind(exact_g_q), bind(approx_g_q)));
    r.add("q-1 coefficient of d2/dx2 g vs d/dq", "coefficient_fd_q",
          coefficient_mismatch(vs, bind(exact_d2x_g), bind(d2x_approx_g)));
}

void gaussian_suite(runner& r)
{
    const auto params_for = [](q_parameter q) { return gaussian_params{1.0, 1.0, q, 1.0}; };

    double origin = 0.0;
    for (const q_parameter q : r.qs()) {
        const auto p = params_for(q);
        origin = std::max(origin, std::abs(coeffs_exact(0.0, p).c));
        origin = std::max(origin, std::abs(exact_qgaussian(0.0, 0.0, p) - 1.0));
    }
    r.add("c(0) = 0 and psi(0,0) = 1", "gaussian_origin", origin);

    const gaussian_params unit = params_for(q_parameter{});
    double jet_gap = 0.0;
    for (double t : {0.0, 0.5, 1.0}) {
        const gaussian_coeff_jet closed = coeffs_first_order(t, unit);
        const gaussian_coeff_jet derived = coeffs_jet(t, unit);
        const complex_value pairs[][2] = {{closed.a1, derived.a1}, {closed.a2, derived.a2}, {closed.b1, derived.b1},
                                          {closed.b2, derived.b2}, {closed.c1, derived.c1}, {closed.c2, derived.c2}};
        for (const auto& pr : pairs)
            jet_gap = std::max(jet_gap, relative_error(pr[1], pr[0], 1.0));
        for (double x : linspace(-5.0, 5.0, 21)) {
            const complex_value p1 = closed.leading().polynomial(x);
            const complex_value p2 = closed.correction().polynomial(x);
            const complex_value v0 = std::exp(-p1);
            const complex_value v1 = -(p2 - 0.5 * p1 * p1) * v0;
            const q_jet psi = qgaussian_jet(x, t, unit);
            const double denom = std::max({std::abs(v0), std::abs(v1), tiny});
            jet_gap = std::max({jet_gap, std::abs(psi.v0 - v0) / denom, std::abs(psi.v1 - v1) / denom});
        }
    }
    r.add("jet expansion of the q-Gaussian vs closed-form coefficients", "gaussian_jet", jet_gap);

    const fd_scheme scheme{};
    double exact_residual = 0.0;
    for (const q_parameter q : r.qs())
        for (double t : {0.0, 0.25, 0.5})
            for (double x : linspace(-3.0, 3.0, 13))
                exact_residual = std::max(
                    exact_residual,
                    qgaussian_residual_sample(x, t, params_for(q), scheme, residual_family::exact).sample.relative());
    r.add("exact q-Gaussian residual (finite differences)", "gaussian_exact_residual", exact_residual);

    r.order_rows("q-Gaussian", [&](q_parameter q) {
        double worst = 0.0;
        for (double t : {0.0, 0.25})
            for (double x : linspace(-2.0, 2.0, 9))
                worst = std::max(worst, std::abs(residual_qgaussian(x, t, params_for(q), scheme)));
        return worst;
    });

    const q_parameter band_q = r.qs().size() == 1 ? r.qs().front() : q_parameter::from_epsilon(1e-3);
    double band = 0.0;
    for (const ratio_row& row : run_gaussian_sweep(params_for(band_q), default_gaussian_range(), 0.0, r.workers()))
        band = std::max(band, std::abs(row.ratio - 1.0));
    r.add("q-Gaussian ratio deviation over [-5, 5]", "gaussian_ratio_band", band);
}

void kleingordon_suite(runner& r)
{
    const kg_wave w = kg_wave::on_shell(1.0, 1.0);
    const kg_wave off = kg_wave::with_frequency(w.k, 1.01 * w.omega, w.m);
    const grid_2d grid{-10.0, 10.0, 2001, 0.0, 5.0, 11};
    const auto sample = [](const kg_wave& wave, residual_family f) {
        return [&wave, f](double x, double t, q_parameter q) { return kg_residual_sample(f, x, t, wave, q); };
    };

    const double on_shell = r.grid_max_rel(sample(w, residual_family::exact), grid);
    r.add("exact KG residual on shell", "exact_residual", on_shell);
    double off_shell = std::numeric_limits<double>::infinity();
    for (const q_parameter q : r.qs()) {
        const auto report = grid_residual([&](double x, double t) { return kg_residual_sample(residual_family::exact, x, t, off, q); },
                                          grid, r.workers());
        off_shell = std::min(off_shell, report.max_rel);
    }
    r.add("1% frequency shift amplifies the residual by", "kg_sensitivity",
          on_shell > 0.0 ? off_shell / on_shell : std::numeric_limits<double>::infinity(), comparison::at_least);

    double bracket = 0.0;
    for (const q_parameter q : r.qs()) {
        for (double u : linspace(-10.0, 10.0, 201)) {
            const complex_value phase = std::exp(complex_value{0.0, u});
            const complex_value ref = first_order_bracket(u, q);
            const complex_value forms[] = {d2x_approx_F(u, 0.0, w, q) / (-w.k * w.k * phase),
                                           d2t_approx_F(u, 0.0, w, q) / (-w.omega * w.omega * phase),
                                           approx_qF2qm1(u, 0.0, w, q) / phase};
            for (const complex_value& b : forms)
                bracket = std::max(bracket, relative_error(b, ref));
        }
    }
    r.add("shared bracket of d2x, d2t and qF^(2q-1)", "bracket_identity", bracket);

    r.add("first-order coefficient of the KG residual (expansion family)", "expansion_residual",
          r.grid_max_rel(sample(w, residual_family::expansion), grid));

    const auto xs = linspace(-2.0, 2.0, 41);
    const auto ts = linspace(0.0, 1.0, 5);
    r.order_rows("KG plane wave", [&](q_parameter q) {
        return max_abs_over(xs, ts, [&](double x, double t) { return residual_kg(x, t, w, q, residual_family::approx); });
    });

    const auto us = linspace(-10.0, 10.0, 21);
    const auto in_x = [&](auto fn) { return [=, &w](double x, q_parameter q) { return fn(x, 0.25, w, q); }; };
    const auto in_t = [&](auto fn) { return [=, &w](double t, q_parameter q) { return fn(0.7, t, w, q); }; };
    r.add("d2/dx2 F vs finite differences", "derivative_fd", r.fd_mismatch(us, in_x(exact_F), in_x(exact_d2x_F), 2));
    r.add("d2/dt2 F vs finite differences", "derivative_fd", r.fd_mismatch(us, in_t(exact_F), in_t(exact_d2t_F), 2));
    r.add("d2/dx2 of the KG approximant vs finite differences", "derivative_fd",
          r.fd_mismatch(us, in_x(approx_F), in_x(d2x_approx_F), 2));
    r.add("d2/dt2 of the KG approximant vs finite differences", "derivative_fd",
          r.fd_mismatch(us, in_t(approx_F), in_t(d2t_approx_F), 2));

    if (r.trivial())
        return;
    r.add("q-1 coefficient of F vs d/dq", "coefficient_fd_q", coefficient_mismatch(us, in_x(exact_F), in_x(approx_F)));
    const q_function q_power = [&](double x, q_parameter q) { return q.q * exact_F_2qm1(x, 0.25, w, q); };
    r.add("q-1 coefficient of qF^(2q-1) vs d/dq", "coefficient_fd_q",
          coefficient_mismatch(us, q_power, in_x(approx_qF2qm1)));
}

} // namespace

std::optional<suite_id> parse_suite(std::string_view name)
{
    if (name == "planewave")
        return suite_id::planewave;
    if (name == "separation")
        return suite_id::separation;
    if (name == "gaussian")
        return suite_id::gaussian;
    if (name == "kleingordon")
        return suite_id::kleingordon;
    if (name == "all")
        return suite_id::all;
    return std::nullopt;
}

bool check_row::pass() const
{
    if (std::isnan(measured))
        return false;
    return cmp == comparison::at_most ? measured <= tolerance : measured >= tolerance;
}

const std::map<std::string, double>& default_tolerances()
{
    static const std::map<std::string, double> table{
        {"exact_residual", 1e-10},     {"expansion_residual", 1e-12}, {"order_slope", 1.9},
        {"order_r2", 0.999},           {"derivative_fd", 1e-8},       {"coefficient_fd_q", 1e-6},
        {"gaussian_origin", 1e-13},    {"gaussian_jet", 1e-11},       {"gaussian_exact_residual", 1e-6},
        {"gaussian_ratio_band", 0.1},  {"kg_sensitivity", 1e4},       {"bracket_identity", 1e-14},
    };
    return table;
}

std::vector<check_row> run_suite(suite_id id, const suite_options& options)
{
    for (const auto& [key, value] : options.tolerances) {
        if (!default_tolerances().contains(key))
            throw error(errc::invalid_parameter, "unknown tolerance key '" + key + "'");
        require_finite(value, "tolerance");
    }

    std::vector<check_row> rows;
    const auto run = [&](const char* name, void (*body)(runner&)) {
        runner r(name, options, rows);
        body(r);
    };
    if (id == suite_id::planewave || id == suite_id::all)
        run("planewave", planewave_suite);
    if (id == suite_id::separation || id == suite_id::all)
        run("separation", separation_suite);
    if (id == suite_id::gaussian || id == suite_id::all)
        run("gaussian", gaussian_suite);
    if (id == suite_id::kleingordon || id == suite_id::all)
        run("kleingordon", kleingordon_suite);
    return rows;
}

} // namespace qwave
