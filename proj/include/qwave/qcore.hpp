#pragma once

/**
 * q-deformed exponentials over the complex numbers and first-order jet
 * arithmetic in eps = q - 1.
 *
 *   e_q(z) = [1 + (1-q) z]^(1/(1-q)),    e_1(z) = exp(z)
 *
 * All powers use the principal branch of the complex logarithm. The
 * exponent is formed as z * log1p(w)/w with w = (1-q) z, never as
 * log(1+w)/(1-q), so that q - 1 ~ 1e-12 keeps full precision.
 */

#include <qwave/error.hpp>

#include <complex>

namespace qwave {

using complex_value = std::complex<double>;

inline constexpr complex_value imag_unit{0.0, 1.0};

struct q_parameter {
    double q = 1.0;

    [[nodiscard]] static q_parameter from_epsilon(double eps) { return {1.0 + eps}; }

    /// q - 1, exact in binary floating point for q in [0.5, 2].
    [[nodiscard]] double epsilon() const noexcept { return q - 1.0; }
    [[nodiscard]] double one_minus_q() const noexcept { return 1.0 - q; }
};

/// Value and first q-derivative of a quantity at q = 1.
struct q_jet {
    complex_value v0{};
    complex_value v1{};

    [[nodiscard]] complex_value evaluate(double eps) const { return v0 + eps * v1; }

    q_jet& operator+=(const q_jet& o)
    {
        v0 += o.v0;
        v1 += o.v1;
        return *this;
    }
    q_jet& operator-=(const q_jet& o)
    {
        v0 -= o.v0;
        v1 -= o.v1;
        return *this;
    }
    q_jet& operator*=(const q_jet& o)
    {
        v1 = v1 * o.v0 + v0 * o.v1;
        v0 *= o.v0;
        return *this;
    }
};

[[nodiscard]] inline q_jet jet_constant(complex_value c) { return {c, 0.0}; }
/// eps = q - 1 as a jet.
[[nodiscard]] inline q_jet jet_epsilon() { return {0.0, 1.0}; }
/// q itself as a jet.
[[nodiscard]] inline q_jet jet_q() { return {1.0, 1.0}; }

[[nodiscard]] inline q_jet operator+(q_jet a, const q_jet& b) { return a += b; }
[[nodiscard]] inline q_jet operator-(q_jet a, const q_jet& b) { return a -= b; }
[[nodiscard]] inline q_jet operator*(q_jet a, const q_jet& b) { return a *= b; }
[[nodiscard]] inline q_jet operator-(const q_jet& a) { return {-a.v0, -a.v1}; }
[[nodiscard]] inline q_jet operator*(complex_value s, const q_jet& a) { return {s * a.v0, s * a.v1}; }
[[nodiscard]] inline q_jet operator*(const q_jet& a, complex_value s) { return s * a; }
[[nodiscard]] inline q_jet operator+(const q_jet& a, complex_value s) { return {a.v0 + s, a.v1}; }
[[nodiscard]] inline q_jet operator+(complex_value s, const q_jet& a) { return a + s; }

[[nodiscard]] inline q_jet jet_add(const q_jet& a, const q_jet& b) { return a + b; }
[[nodiscard]] inline q_jet jet_mul(const q_jet& a, const q_jet& b) { return a * b; }

/// Throws DivisionByZeroJet when v0 == 0.
[[nodiscard]] q_jet jet_reciprocal(const q_jet& a);
[[nodiscard]] q_jet operator/(const q_jet& a, const q_jet& b);

[[nodiscard]] q_jet jet_exp(const q_jet& a);

/// Logarithm of a jet. `sheet` selects log(v0) + 2*pi*i*sheet; 0 is the
/// principal branch. Throws BranchCutViolation for v0 on the negative real
/// axis with sheet 0, DivisionByZeroJet for v0 == 0.
[[nodiscard]] q_jet jet_ln(const q_jet& a, int sheet = 0);

/// a^(alpha + beta*eps), taken through jet_ln(a, sheet).
[[nodiscard]] q_jet jet_pow_linear(const q_jet& a, double alpha, double beta, int sheet = 0);

/// The sheet index k for which arg(v) + 2*pi*k is nearest to `target_phase`.
[[nodiscard]] int nearest_sheet(complex_value v, double target_phase);

/// True when 1 + w lies on the closed negative real axis.
[[nodiscard]] bool on_log1p_cut(complex_value w) noexcept;

/// log(1 + w) without cancellation for small |w|; principal branch.
[[nodiscard]] complex_value log1p(complex_value w);

/// exp(z) - 1 without cancellation for small |z|.
[[nodiscard]] complex_value expm1(complex_value z);

/// Radius below which log1p(w)/w switches to its Taylor series.
inline constexpr double log1p_series_radius = 1e-4;

/// log(1 + w) / w, equal to 1 at w = 0.
[[nodiscard]] complex_value stable_log1p_over_w(complex_value w);

/// Jet of log(1 + w)/w for a jet-valued w.
[[nodiscard]] q_jet jet_log1p_over_w(const q_jet& w);

enum class q_exp_path {
    automatic, ///< series below log1p_series_radius, direct log1p above
    direct,    ///< always log1p(w)/w evaluated directly
};

/// ln e_q(z) = log(1 + (1-q) z)/(1-q), continuous with z at q = 1.
[[nodiscard]] complex_value q_log_exp(complex_value z, q_parameter q, q_exp_path path = q_exp_path::automatic);

/// e_q(z) on the principal branch.
[[nodiscard]] complex_value q_exp(complex_value z, q_parameter q, q_exp_path path = q_exp_path::automatic);

/// Jet of ln e_q(z) where z may itself depend on q.
[[nodiscard]] q_jet q_log_exp_jet(const q_jet& z);

/// (e^z, (z^2/2) e^z).
[[nodiscard]] q_jet q_exp_jet(complex_value z);

/// Jet of e_q(z) where z may itself depend on q.
[[nodiscard]] q_jet q_exp_jet(const q_jet& z);

/// q + 2i(q-1)u - (q-1)u^2/2, the bracket shared by every second-derivative
/// and power expansion of the first-order plane wave.
[[nodiscard]] complex_value first_order_bracket(double u, q_parameter q);

void require_finite(complex_value z, const char* what);
void require_finite(double v, const char* what);

/// Returns z, or throws NonFiniteResult.
complex_value checked_result(complex_value z, const char* what);

} // namespace qwave
