#include "eitsim/cross_section.hpp"

#include <cmath>
#include <utility>

#include "eitsim/units.hpp"

namespace eitsim {

using namespace units;

namespace {

Eigen::VectorXcd elastic_source(const RestrictedBasis& basis, const AtomConfiguration& config)
{
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dim()));
    for (int a = 0; a < basis.atom_count(); ++a) {
        const double phase = wave_number * config.positions[static_cast<std::size_t>(a)].z();
        v[static_cast<Eigen::Index>(basis.elastic_index(a))] =
            std::exp(complex(0.0, phase));
    }
    return v;
}

} // namespace

CrossSectionSweep::CrossSectionSweep(EffectiveHamiltonian hamiltonian,
                                     const AtomConfiguration& config, const ModelParams& params,
                                     const SweepOptions& options, const LevelScheme& scheme)
    : sweep_(std::move(hamiltonian.matrix), elastic_source(hamiltonian.basis, config), options),
      rabi_(params.rabi_control),
      control_detuning_(params.control_detuning)
{
    // |<e| d.e_probe |g,+1>|^2 for the sigma- probe; d0^2 in natural units.
    const complex overlap =
        absorption_vector(+1, scheme).transpose() * photon_polarization(-1);
    coupling_ = dipole_sq * std::norm(overlap);
}

complex CrossSectionSweep::forward_amplitude(double probe_detuning) const
{
    // Exact two-photon resonance: the dressing shift diverges and the
    // resolvent vanishes.
    if (rabi_ > 0.0 && probe_detuning == control_detuning_)
        return {0.0, 0.0};
    const double dressing = (rabi_ > 0.0)
        ? rabi_ * rabi_ / (2.0 * (probe_detuning - control_detuning_))
        : 0.0;
    const complex z{probe_detuning - dressing, 0.0};
    return coupling_ * sweep_.evaluate(z);
}

double CrossSectionSweep::total_cross_section(double probe_detuning) const
{
    return -4.0 * pi * wave_number * forward_amplitude(probe_detuning).imag();
}

std::vector<double> CrossSectionSweep::spectrum(const FrequencyGrid& grid) const
{
    grid.validate();
    std::vector<double> q0(static_cast<std::size_t>(grid.points));
    for (int i = 0; i < grid.points; ++i)
        q0[static_cast<std::size_t>(i)] = total_cross_section(grid.value(i));
    return q0;
}

complex forward_amplitude(double probe_detuning, const EffectiveHamiltonian& hamiltonian,
                          const AtomConfiguration& config, const ModelParams& params,
                          const SweepOptions& options)
{
    return CrossSectionSweep(hamiltonian, config, params, options)
        .forward_amplitude(probe_detuning);
}

double total_cross_section(double probe_detuning, const EffectiveHamiltonian& hamiltonian,
                           const AtomConfiguration& config, const ModelParams& params,
                           const SweepOptions& options)
{
    return CrossSectionSweep(hamiltonian, config, params, options)
        .total_cross_section(probe_detuning);
}

std::vector<double> cross_section_spectrum(const FrequencyGrid& grid,
                                           const AtomConfiguration& config,
                                           const ModelParams& params, const SweepOptions& options)
{
    const RestrictedBasis basis = build_basis(config, params.neighbor_count, params.basis_cap);
    EffectiveHamiltonian h = assemble_hamiltonian(basis, config, params);
    return CrossSectionSweep(std::move(h), config, params, options).spectrum(grid);
}

} // namespace eitsim
