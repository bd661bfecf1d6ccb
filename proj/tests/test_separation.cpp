#include <doctest.h>

#include "oracle.hpp"
#include "test_support.hpp"

#include <qwave/planewave.hpp>
#include <qwave/separation.hpp>
#include <qwave/verify.hpp>

#include <cmath>

using namespace qwave;
using test_support::rel;

namespace {

const complex_value I{0.0, 1.0};
const schrodinger_wave unit = schrodinger_wave::free(1.0, 1.0);
const separation_constant lambda = separation_constant::free_particle(unit);

bool throws_code(errc code, const auto& fn)
{
    try {
        fn();
    } catch (const error& e) {
        return e.code() == code;
    }
    return false;
}

} // namespace

TEST_CASE("separation constant is the free-particle energy")
{
    CHECK(lambda.lambda == 0.5);
}

TEST_CASE("f(t) values")
{
    CHECK(exact_f(0.0, unit, q_parameter{1.2}) == complex_value{1.0});
    CHECK(rel(exact_f(1.3, unit, q_parameter{1.0}), std::exp(-I * 0.65)) < 1e-15);

    // [1 + i (1-q)/q E t]^{1/(q-1)}, q = 1.1, E = 0.5, t = 1.3
    const complex_value frozen{0.84542333297864208582, -0.56633076305493545388};
    CHECK(rel(exact_f(1.3, unit, q_parameter{1.1}), frozen) < 1e-14);
    const oracle::real q(1.1), e(0.5), t(1.3);
    const oracle::cplx base(oracle::real(1), (1 - q) / q * e * t);
    CHECK(rel(oracle::drop(oracle::cpow(base, oracle::cplx(1 / (q - 1)))), frozen) < 1e-15);

    CHECK(throws_code(errc::invalid_q, [] { (void)exact_f(1.0, unit, q_parameter{0.0}); }));
}

TEST_CASE("g(x) values")
{
    CHECK(exact_g(0.0, unit, q_parameter{0.8}) == complex_value{1.0});
    CHECK(rel(exact_g(1.7, unit, q_parameter{1.0}), std::exp(I * 1.7)) < 1e-15);

    const complex_value frozen{-0.18139839690980411244, 1.0633473439768824345};
    CHECK(rel(exact_g(1.7, unit, q_parameter{0.9}), frozen) < 1e-14);

    CHECK(throws_code(errc::invalid_q, [] { (void)exact_g(1.0, unit, q_parameter{-1.0}); }));
    CHECK(throws_code(errc::invalid_q, [] { (void)exact_g(1.0, unit, q_parameter{-2.0}); }));
}

TEST_CASE("jets of f and g against their closed forms")
{
    for (double s : {-6.0, -0.7, 0.0, 2.2, 8.0}) {
        const complex_value tau{s * unit.E / unit.hbar};
        const complex_value f_expected = (I * tau + tau * tau / 2.0) * std::exp(-I * tau);
        const fd_result df = fd_q_derivative([&](q_parameter q) { return exact_f(s, unit, q); });
        CHECK(std::abs(df.value - f_expected) <= 1e-10 * std::max(std::abs(f_expected), 1.0));

        const complex_value v{s * unit.p / unit.hbar};
        const complex_value g_expected = -0.25 * (I * v + v * v) * std::exp(I * v);
        const fd_result dg = fd_q_derivative([&](q_parameter q) { return exact_g(s, unit, q); });
        CHECK(std::abs(dg.value - g_expected) <= 1e-10 * std::max(std::abs(g_expected), 1.0));
    }
}

TEST_CASE("approximants at q = 1 and at the origin")
{
    const q_parameter one{1.0};
    CHECK(rel(approx_f(0.9, unit, one), std::exp(-I * 0.45)) < 1e-15);
    CHECK(rel(approx_f_q(0.9, unit, one), std::exp(-I * 0.45)) < 1e-15);
    CHECK(rel(approx_g(0.9, unit, one), std::exp(I * 0.9)) < 1e-15);
    CHECK(rel(approx_g_q(0.9, unit, one), std::exp(I * 0.9)) < 1e-15);
    CHECK(rel(d2x_approx_g(0.9, unit, one), -std::exp(I * 0.9)) < 1e-15);
    for (double q : {0.9, 1.2}) {
        CHECK(approx_f(0.0, unit, q_parameter{q}) == complex_value{1.0});
        CHECK(approx_g(0.0, unit, q_parameter{q}) == complex_value{1.0});
        CHECK(approx_g_q(0.0, unit, q_parameter{q}) == complex_value{1.0});
        CHECK(rel(dt_approx_f_q(0.0, unit, q_parameter{q}), -I * unit.E) < 1e-15);
        CHECK(rel(d2x_approx_g(0.0, unit, q_parameter{q}), -1.0) < 1e-15);
    }
}

TEST_CASE("expanded powers match jets of the exact powers")
{
    for (double s : {-5.0, -1.0, 0.5, 3.0}) {
        const q_jet f = q_jet{exact_f(s, unit, q_parameter{1.0}),
                              fd_q_derivative([&](q_parameter q) { return exact_f(s, unit, q); }).value};
        const q_jet f_raised = jet_pow_linear(f, 1.0, 1.0, nearest_sheet(f.v0, -s * unit.E));
        const complex_value f0 = approx_f_q(s, unit, q_parameter{1.0});
        CHECK(rel(f0, f_raised.v0) < 1e-12);
        CHECK(std::abs(approx_f_q(s, unit, q_parameter{2.0}) - f0 - f_raised.v1) < 1e-8);

        // no linear-in-t imaginary piece survives in the f^q coefficient
        const complex_value coef = (approx_f_q(s, unit, q_parameter{2.0}) - f0) / f0;
        CHECK(std::abs(coef.imag()) < 1e-15);

        const q_jet g = q_jet{exact_g(s, unit, q_parameter{1.0}),
                              fd_q_derivative([&](q_parameter q) { return exact_g(s, unit, q); }).value};
        const q_jet g_raised = jet_pow_linear(g, 1.0, 1.0, nearest_sheet(g.v0, s * unit.p));
        const complex_value g0 = approx_g_q(s, unit, q_parameter{1.0});
        CHECK(rel(g0, g_raised.v0) < 1e-12);
        CHECK(std::abs(approx_g_q(s, unit, q_parameter{2.0}) - g0 - g_raised.v1) < 1e-8);
    }
}

TEST_CASE("approximant derivatives match finite differences")
{
    for (double q : {0.97, 1.05}) {
        const q_parameter qp{q};
        for (double s : {-4.0, 0.6, 7.0}) {
            const auto fq = [&](double t) { return approx_f_q(t, unit, qp); };
            const auto g = [&](double x) { return approx_g(x, unit, qp); };
            CHECK(rel(fd_derivative(fq, s, {}, 1).value, dt_approx_f_q(s, unit, qp)) < 1e-8);
            CHECK(rel(fd_derivative(g, s, {}, 2).value, d2x_approx_g(s, unit, qp)) < 1e-8);
        }
    }
}

TEST_CASE("separated residuals")
{
    for (double s : {-3.0, 0.0, 2.5}) {
        for (double q : {0.9, 1.1}) {
            const q_parameter qp{q};
            CHECK(f_residual_sample(residual_family::exact, s, unit, lambda, qp).relative() <= 1e-10);
            CHECK(g_residual_sample(residual_family::exact, s, unit, lambda, qp).relative() <= 1e-10);
            CHECK(f_residual_sample(residual_family::expansion, s, unit, lambda, qp).relative() <= 1e-12);
            CHECK(g_residual_sample(residual_family::expansion, s, unit, lambda, qp).relative() <= 1e-12);
        }
        CHECK(f_residual_sample(residual_family::approx, s, unit, lambda, q_parameter{1.0}).relative() <= 1e-12);
        CHECK(g_residual_sample(residual_family::approx, s, unit, lambda, q_parameter{1.0}).relative() <= 1e-12);
    }

    const auto halving = [](auto residual) {
        double a = 0.0, b = 0.0;
        for (int i = 0; i <= 20; ++i) {
            const double s = -3.0 + 0.3 * i;
            a = std::max(a, std::abs(residual(s, q_parameter::from_epsilon(1e-3))));
            b = std::max(b, std::abs(residual(s, q_parameter::from_epsilon(5e-4))));
        }
        return a / b;
    };
    const double rf = halving([](double t, q_parameter q) { return residual_f(residual_family::approx, t, unit, lambda, q); });
    const double rg = halving([](double x, q_parameter q) { return residual_g(residual_family::approx, x, unit, lambda, q); });
    CHECK(rf == doctest::Approx(4.0).epsilon(0.1));
    CHECK(rg == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("f g product differs from the plane-wave approximant at first order")
{
    const double x = 1.3, t = 0.8;
    const auto product = [&](q_parameter q) { return approx_f(t, unit, q) * approx_g(x, unit, q); };
    const complex_value sep = product(q_parameter{2.0}) - product(q_parameter{1.0});
    const complex_value plane = approx_psi({x, t}, unit, q_parameter{2.0}) - approx_psi({x, t}, unit, q_parameter{1.0});
    CHECK(std::abs(sep - plane) > 1e-2);
}
