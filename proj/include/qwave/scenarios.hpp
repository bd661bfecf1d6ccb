#pragma once

#include <qwave/kleingordon.hpp>
#include <qwave/planewave.hpp>
#include <qwave/qgaussian.hpp>

#include <cstddef>
#include <vector>

namespace qwave {

namespace constants {

// CODATA 2018 exact / recommended values, SI.
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double c = 2.99792458e8;              // m / s (exact)
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
inline constexpr double proton_mass = 1.67262192369e-27;   // kg
inline constexpr double elementary_charge = 1.602176634e-19; // C (exact)
inline constexpr double joule_per_mev = elementary_charge * 1e6;

} // namespace constants

[[nodiscard]] constexpr double mev_to_joule(double mev) { return mev * constants::joule_per_mev; }
[[nodiscard]] constexpr double joule_to_mev(double joule) { return joule / constants::joule_per_mev; }

enum class species { electron, proton, custom };
enum class momentum_model { relativistic, nonrelativistic };

struct sample_range {
    double min = 0.0;
    double max = 1.0;
    std::size_t npoints = 2001;

    [[nodiscard]] double at(std::size_t i) const;
};

struct particle_scenario {
    species kind = species::electron;
    /// kg, used when kind == custom.
    double custom_mass = 0.0;
    /// Kinetic energy in joules.
    double kinetic_energy = mev_to_joule(1.0);
    momentum_model model = momentum_model::relativistic;
    double q_minus_1 = 1e-9;
    sample_range x{0.0, 1.0, 2001};
    double t = 0.0;

    [[nodiscard]] double mass() const;
    /// Throws InvalidParameter on a non-positive energy or mass, fewer than
    /// two points, or a non-increasing range.
    void validate() const;
};

/// Kinetic energy to momentum (kg m/s).
[[nodiscard]] double momentum_from_energy(const particle_scenario& scn);

/// Free Schroedinger plane wave (E = p^2/2m) in SI units.
[[nodiscard]] schrodinger_wave schrodinger_wave_for(const particle_scenario& scn);
/// On-shell Klein-Gordon wave with k = p/hbar, in SI units.
[[nodiscard]] kg_wave kg_wave_for(const particle_scenario& scn);

struct ratio_row {
    double x = 0.0;
    double ratio = 0.0;
};

/// ratio_R over the scenario's x grid at fixed t, ordered by x.
[[nodiscard]] std::vector<ratio_row> run_ratio_sweep(const particle_scenario& scn, unsigned workers = 1);

/// Default q-Gaussian sweep range: [-5, 5].
[[nodiscard]] inline sample_range default_gaussian_range() { return {-5.0, 5.0, 2001}; }

/// ratio_gaussian over x_range at fixed t, ordered by x.
[[nodiscard]] std::vector<ratio_row> run_gaussian_sweep(const gaussian_params& params, const sample_range& x_range,
                                                        double t = 0.0, unsigned workers = 1);

} // namespace qwave
