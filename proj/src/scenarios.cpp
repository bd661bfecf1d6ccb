#include <qwave/scenarios.hpp>

#include <qwave/parallel.hpp>

#include <cmath>

namespace qwave {

namespace {

void validate_range(const sample_range& r)
{
    require_finite(r.min, "range minimum");
    require_finite(r.max, "range maximum");
    if (r.npoints < 2)
        throw error(errc::invalid_parameter, "a sweep needs at least two points");
    if (!(r.max > r.min))
        throw error(errc::invalid_parameter, "sweep range must be increasing");
}

std::vector<ratio_row> sweep(const sample_range& r, unsigned workers, const std::function<double(double)>& ratio)
{
    validate_range(r);
    std::vector<ratio_row> rows(r.npoints);
    parallel_for(rows.size(), workers, [&](std::size_t i) {
        const double x = r.at(i);
        rows[i] = {x, ratio(x)};
    });
    return rows;
}

} // namespace

double sample_range::at(std::size_t i) const
{
    if (i + 1 == npoints)
        return max;
    return std::lerp(min, max, static_cast<double>(i) / static_cast<double>(npoints - 1));
}

double particle_scenario::mass() const
{
    switch (kind) {
    case species::electron:
        return constants::electron_mass;
    case species::proton:
        return constants::proton_mass;
    case species::custom:
        return custom_mass;
    }
    return custom_mass;
}

void particle_scenario::validate() const
{
    require_finite(kinetic_energy, "kinetic energy");
    require_finite(q_minus_1, "q - 1");
    require_finite(t, "t");
    if (!(kinetic_energy > 0.0))
        throw error(errc::invalid_parameter, "kinetic energy must be positive");
    if (!(mass() > 0.0) || !std::isfinite(mass()))
        throw error(errc::invalid_parameter, "particle mass must be positive");
    validate_range(x);
}

double momentum_from_energy(const particle_scenario& scn)
{
    const double m = scn.mass();
    const double T = scn.kinetic_energy;
    if (scn.model == momentum_model::nonrelativistic)
        return std::sqrt(2.0 * m * T);
    const double rest = m * constants::c * constants::c;
    return std::sqrt(T * T + 2.0 * T * rest) / constants::c;
}

schrodinger_wave schrodinger_wave_for(const particle_scenario& scn)
{
    scn.validate();
    return schrodinger_wave::free(momentum_from_energy(scn), scn.mass(), constants::hbar);
}

kg_wave kg_wave_for(const particle_scenario& scn)
{
    scn.validate();
    return kg_wave::on_shell(momentum_from_energy(scn) / constants::hbar, scn.mass(), constants::c,
                             constants::hbar);
}

std::vector<ratio_row> run_ratio_sweep(const particle_scenario& scn, unsigned workers)
{
    const schrodinger_wave w = schrodinger_wave_for(scn);
    const q_parameter q = q_parameter::from_epsilon(scn.q_minus_1);
    return sweep(scn.x, workers, [&](double x) { return ratio_R({x, scn.t}, w, q); });
}

std::vector<ratio_row> run_gaussian_sweep(const gaussian_params& params, const sample_range& x_range, double t,
                                          unsigned workers)
{
    return sweep(x_range, workers, [&](double x) { return ratio_gaussian(x, t, params); });
}

} // namespace qwave
