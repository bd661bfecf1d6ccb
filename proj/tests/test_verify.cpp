#include <doctest.h>

#include "test_support.hpp"

#include <qwave/parallel.hpp>
#include <qwave/verify.hpp>

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace qwave;
using test_support::rel;

namespace {

const complex_value I{0.0, 1.0};

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

TEST_CASE("finite differences of known functions")
{
    const auto wave = [](double x) { return std::exp(I * x); };
    CHECK(std::abs(fd_derivative(wave, 0.0, {}).value - I) < 1e-12);
    CHECK(std::abs(fd_derivative(wave, 0.0, {}, 2).value + 1.0) < 1e-10);

    // a quadratic is differentiated exactly by the 3-point stencil
    const auto square = [](double x) { return complex_value{x * x}; };
    const fd_result d2 = fd_derivative(square, 0.5, {0.25, 2, 0}, 2);
    CHECK(d2.value == complex_value{2.0});

    const fd_result dq = fd_q_derivative([](q_parameter q) { return q_exp(complex_value{1.0}, q); });
    CHECK(std::abs(dq.value - std::numbers::e / 2.0) < 1e-9);
}

TEST_CASE("Richardson levels shrink the error")
{
    for (auto fn : {complex_function([](double x) { return complex_value{std::sin(x)}; }),
                    complex_function([](double x) { return complex_value{std::exp(x)}; })}) {
        double previous = INFINITY;
        for (int levels = 0; levels <= 2; ++levels) {
            const fd_result r = fd_derivative(fn, 0.7, {0.1, 2, levels}, 1);
            CHECK(r.error_estimate < previous);
            previous = r.error_estimate;
        }
    }
    const fd_result s = fd_derivative([](double x) { return complex_value{std::sin(x)}; }, 0.7, {0.1, 2, 2}, 1);
    CHECK(std::abs(s.value - std::cos(0.7)) < 1e-10);
}

TEST_CASE("finite-difference failures")
{
    const auto bad = [](double x) -> complex_value {
        if (x > 1.0)
            throw std::runtime_error("outside");
        return complex_value{x};
    };
    CHECK(throws_code(errc::stencil_evaluation_failed, [&] { (void)fd_derivative(bad, 0.99, {0.1, 4, 1}); }));
    const auto nan_fn = [](double) { return complex_value{NAN}; };
    CHECK(throws_code(errc::stencil_evaluation_failed, [&] { (void)fd_derivative(nan_fn, 0.0, {}); }));
    CHECK_THROWS_AS((void)fd_derivative([](double x) { return complex_value{x}; }, 0.0, {0.0, 4, 1}), error);
    CHECK_THROWS_AS((void)fd_derivative([](double x) { return complex_value{x}; }, 0.0, {0.1, 3, 1}), error);
    CHECK_THROWS_AS((void)fd_derivative([](double x) { return complex_value{x}; }, 0.0, {0.1, 4, 1}, 3), error);
}

TEST_CASE("order fits")
{
    const std::vector<double> eps = default_epsilon_ladder();
    REQUIRE(eps.size() == 5);
    CHECK(eps.front() == 1e-2);
    CHECK(eps.back() == doctest::Approx(1e-4).epsilon(1e-15));

    const order_fit two = order_of_convergence([](double e) { return 3.0 * e * e; }, eps);
    CHECK(two.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(two.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    const order_fit one = order_of_convergence([](double e) { return 0.5 * e; }, eps);
    CHECK(one.slope == doctest::Approx(1.0).epsilon(1e-12));

    const order_fit zero = order_of_convergence([](double) { return 0.0; }, eps);
    CHECK(zero.identically_zero());
    CHECK(std::isinf(zero.slope));

    CHECK(throws_code(errc::degenerate_fit, [&] {
        (void)order_of_convergence([](double e) { return e > 1e-3 ? e : 0.0; }, eps);
    }));
    CHECK(throws_code(errc::degenerate_fit, [&] { (void)order_of_convergence([](double) { return NAN; }, eps); }));
    const std::vector<double> short_ladder{1e-2, 1e-3};
    CHECK_THROWS_AS((void)order_of_convergence([](double e) { return e; }, short_ladder), error);
    const std::vector<double> narrow{1e-2, 5e-3, 2e-3};
    CHECK_THROWS_AS((void)order_of_convergence([](double e) { return e; }, narrow), error);
    const std::vector<double> increasing{1e-4, 1e-3, 1e-2};
    CHECK_THROWS_AS((void)order_of_convergence([](double e) { return e; }, increasing), error);
}

TEST_CASE("grid residual reports")
{
    const grid_2d grid{-1.0, 1.0, 21, 0.0, 1.0, 3};
    CHECK(grid.size() == 63);
    CHECK(grid.x(0) == -1.0);
    CHECK(grid.x(20) == 1.0);
    CHECK(grid.t(2) == 1.0);

    const residual_report zero = grid_residual([](double, double) { return residual_sample{}; }, grid);
    CHECK(zero.max_abs == 0.0);
    CHECK(zero.max_rel == 0.0);
    CHECK(zero.nx == 21);
    CHECK(zero.nt == 3);

    const auto peaked = [](double x, double t) {
        return residual_sample{complex_value{x * t}, 2.0};
    };
    for (unsigned workers : {1u, 3u, 8u}) {
        const residual_report r = grid_residual(peaked, grid, workers);
        CHECK(r.max_abs == 1.0);
        CHECK(r.max_rel == 0.5);
        CHECK(std::abs(r.argmax_x) == 1.0);
        CHECK(r.argmax_t == 1.0);
    }
    CHECK_THROWS_AS((void)grid_residual(peaked, grid_2d{0.0, 1.0, 0, 0.0, 0.0, 1}), error);
}

TEST_CASE("relative error")
{
    CHECK(relative_error({1.0, 1.0}, {1.0, 0.0}) == 1.0);
    CHECK(relative_error({1e-20}, {0.0}, 1.0) == 1e-20);
    CHECK(rel({2.0}, {2.0}) == 0.0);
}

TEST_CASE("parallel_for covers every index once")
{
    for (unsigned workers : {1u, 2u, 7u, 64u}) {
        std::vector<std::atomic<int>> hits(1000);
        parallel_for(hits.size(), workers, [&](std::size_t i) { hits[i]++; });
        bool all_once = true;
        for (auto& h : hits)
            all_once = all_once && h.load() == 1;
        CHECK(all_once);
    }
    parallel_for(0, 4, [](std::size_t) { throw std::runtime_error("never called"); });
}

TEST_CASE("parallel_for rethrows the lowest failing index")
{
    for (unsigned workers : {1u, 4u}) {
        try {
            parallel_for(100, workers, [](std::size_t i) {
                if (i == 13 || i == 77)
                    throw std::runtime_error(std::to_string(i));
            });
            FAIL("expected a throw");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()) == "13");
        }
    }
}
