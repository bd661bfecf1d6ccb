#include <doctest.h>

#include "oracle.hpp"
#include "test_support.hpp"

#include <qwave/kleingordon.hpp>
#include <qwave/verify.hpp>

#include <cmath>
#include <numbers>

using namespace qwave;
using test_support::rel;

namespace {

const complex_value I{0.0, 1.0};
const kg_wave unit = kg_wave::on_shell(1.0, 1.0);

} // namespace

TEST_CASE("dispersion relation")
{
    CHECK(dispersion_omega(0.0, 2.0, 3.0, 0.5) == doctest::Approx(2.0 * 9.0 / 0.5));
    CHECK(dispersion_omega(-4.0, 0.0, 2.0, 1.0) == 8.0);
    CHECK(dispersion_omega(1.0, 1.0, 1.0, 1.0) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-16));
    CHECK(unit.dispersion);
    CHECK_FALSE(kg_wave::with_frequency(1.0, 2.0, 1.0).dispersion);
    CHECK_THROWS_AS((void)kg_wave::on_shell(1.0, -1.0), error);
    CHECK_THROWS_AS((void)kg_wave::on_shell(1.0, 1.0, 0.0), error);
}

TEST_CASE("exact and approximate waves")
{
    CHECK(exact_F(0.0, 0.0, unit, q_parameter{1.3}) == complex_value{1.0});
    const double u = 0.3 - std::numbers::sqrt2 * 0.2;
    CHECK(rel(exact_F(0.3, 0.2, unit, q_parameter{1.0}), std::exp(I * u)) < 1e-15);

    const complex_value frozen{0.99983810131234181011, 0.017156176415691244661};
    CHECK(rel(exact_F(0.3, 0.2, unit, q_parameter{1.1}), frozen) < 1e-14);
    CHECK(rel(oracle::q_exp({0.0, u}, 1.1), frozen) < 1e-15);

    CHECK(approx_F(0.0, 0.0, unit, q_parameter{1.2}) == complex_value{1.0});
    CHECK(rel(approx_F(0.3, 0.2, unit, q_parameter{1.0}), std::exp(I * u)) < 1e-15);
    CHECK(rel(d2x_approx_F(0.0, 0.0, unit, q_parameter{1.01}), -1.01) < 1e-15);
    CHECK(rel(d2t_approx_F(0.3, 0.2, unit, q_parameter{1.0}), -2.0 * std::exp(I * u)) < 1e-15);
    CHECK(rel(approx_qF2qm1(0.0, 0.0, unit, q_parameter{1.07}), 1.07) < 1e-15);
    CHECK(rel(approx_qF2qm1(0.3, 0.2, unit, q_parameter{1.0}), std::exp(I * u)) < 1e-15);
}

TEST_CASE("approximant error is second order")
{
    const auto err = [](double eps) {
        double worst = 0.0;
        for (int i = 0; i <= 20; ++i) {
            const q_parameter q = q_parameter::from_epsilon(eps);
            worst = std::max(worst, std::abs(approx_F(-2.0 + 0.2 * i, 0.4, unit, q) - exact_F(-2.0 + 0.2 * i, 0.4, unit, q)));
        }
        return worst;
    };
    CHECK(err(1e-3) / err(5e-4) == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("bracket identity")
{
    for (double q : {0.9, 1.0, 1.1}) {
        const q_parameter qp{q};
        for (int i = 0; i <= 40; ++i) {
            const double x = -10.0 + 0.5 * i;
            const double u = unit.phase(x, 0.0);
            const complex_value phase = std::exp(I * u);
            const complex_value b = first_order_bracket(u, qp);
            CHECK(rel(d2x_approx_F(x, 0.0, unit, qp) / (-unit.k * unit.k * phase), b) <= 1e-14);
            CHECK(rel(d2t_approx_F(x, 0.0, unit, qp) / (-unit.omega * unit.omega * phase), b) <= 1e-14);
            CHECK(rel(approx_qF2qm1(x, 0.0, unit, qp) / phase, b) <= 1e-14);
        }
    }
}

TEST_CASE("jet of q F^{2q-1}")
{
    for (double u : {-5.0, -0.5, 1.0, 4.0}) {
        const complex_value expected = std::exp(I * u) * (1.0 + 2.0 * I * u - u * u / 2.0);
        const fd_result d = fd_q_derivative([&](q_parameter q) { return q.q * exact_F_2qm1(u, 0.0, unit, q); });
        CHECK(std::abs(d.value - expected) <= 1e-6 * std::abs(expected));

        // the expansion holds the same coefficient
        const complex_value coef = approx_qF2qm1(u, 0.0, unit, q_parameter{2.0}) - approx_qF2qm1(u, 0.0, unit, q_parameter{1.0});
        CHECK(std::abs(coef - expected) <= 1e-12 * std::abs(expected));
    }
}

TEST_CASE("second derivatives against finite differences")
{
    for (double q : {0.95, 1.1}) {
        const q_parameter qp{q};
        for (double s : {-6.0, 0.4, 3.0}) {
            const auto fx = [&](double x) { return exact_F(x, 0.3, unit, qp); };
            const auto ft = [&](double t) { return exact_F(0.5, t, unit, qp); };
            const auto ax = [&](double x) { return approx_F(x, 0.3, unit, qp); };
            const auto at = [&](double t) { return approx_F(0.5, t, unit, qp); };
            CHECK(rel(fd_derivative(fx, s, {}, 2).value, exact_d2x_F(s, 0.3, unit, qp)) < 1e-8);
            CHECK(rel(fd_derivative(ft, s, {}, 2).value, exact_d2t_F(0.5, s, unit, qp)) < 1e-8);
            CHECK(rel(fd_derivative(ax, s, {}, 2).value, d2x_approx_F(s, 0.3, unit, qp)) < 1e-8);
            CHECK(rel(fd_derivative(at, s, {}, 2).value, d2t_approx_F(0.5, s, unit, qp)) < 1e-8);
        }
    }
}

TEST_CASE("residual of the exact wave needs the dispersion relation")
{
    const kg_wave off = kg_wave::with_frequency(unit.k, 1.01 * unit.omega, unit.m);
    for (double x : {-3.0, 0.0, 2.0}) {
        const double on_rel = kg_residual_sample(residual_family::exact, x, 0.4, unit, q_parameter{1.1}).relative();
        const double off_rel = kg_residual_sample(residual_family::exact, x, 0.4, off, q_parameter{1.1}).relative();
        CHECK(on_rel <= 1e-10);
        CHECK(off_rel >= 1e4 * std::max(on_rel, 1e-16));
        CHECK(kg_residual_sample(residual_family::exact, x, 0.4, unit, q_parameter{1.0}).relative() <= 1e-12);
    }
}

TEST_CASE("approximant residual")
{
    for (double x : {-3.0, 0.5})
        CHECK(kg_residual_sample(residual_family::expansion, x, 0.2, unit, q_parameter{1.2}).relative() <= 1e-12);

    const auto norm = [](double eps) {
        double worst = 0.0;
        for (int i = 0; i <= 20; ++i)
            worst = std::max(worst, std::abs(residual_kg(-2.0 + 0.2 * i, 0.3, unit, q_parameter::from_epsilon(eps),
                                                         residual_family::approx)));
        return worst;
    };
    CHECK(norm(1e-3) / norm(5e-4) == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("SI-scale wave")
{
    // electron-like parameters: the residual stays relative-accurate
    const kg_wave w = kg_wave::on_shell(7.2e12, 9.1093837015e-31, 2.99792458e8, 1.054571817e-34);
    const double x = 1e-13;
    CHECK(kg_residual_sample(residual_family::exact, x, 0.0, w, q_parameter{1.0 + 1e-9}).relative() <= 1e-10);
}
