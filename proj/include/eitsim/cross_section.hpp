#pragma once

#include <memory>
#include <vector>

#include "eitsim/grid.hpp"
#include "eitsim/hamiltonian.hpp"
#include "eitsim/resolvent.hpp"

namespace eitsim {

/// Frequency sweep of the elastic forward amplitude and the total cross
/// section for one assembled Hamiltonian.  The probe is a sigma- plane
/// wave along z and the initial collective state has every atom in
/// M0 = +1, so the source/probe vector lives on the elastic states,
/// v_a = e^{i k0 z_a}.  The probe frequency enters only as the scalar
/// shift z = Delta - s(Delta) of the resolvent, so one factorization
/// serves the whole sweep.
class CrossSectionSweep {
public:
    /// Takes the Hamiltonian by value: pass std::move(h) to hand the
    /// matrix storage to the sweep instead of copying it.
    CrossSectionSweep(EffectiveHamiltonian hamiltonian, const AtomConfiguration& config,
                      const ModelParams& params, const SweepOptions& options = {},
                      const LevelScheme& scheme = {});

    /// Reduced elastic forward amplitude
    /// sum_{b,a} (d e)*_b (d e)_a e^{ik(z_a - z_b)} <b,+1|R(Delta)|a,+1>,
    /// i.e. the T-matrix element stripped of its 2*pi*hbar*omega/V mode
    /// normalization (the quantization volume cancels in the cross
    /// section and is never materialized).
    complex forward_amplitude(double probe_detuning) const;

    /// Optical-theorem total cross section in lambdabar^2,
    /// Q0 = -4*pi*k0*Im(forward_amplitude).
    double total_cross_section(double probe_detuning) const;

    std::vector<double> spectrum(const FrequencyGrid& grid) const;

    SweepStrategy active_strategy() const { return sweep_.active_strategy(); }
    const ResolventSweep& resolvent() const { return sweep_; }

private:
    ResolventSweep sweep_;
    double rabi_;
    double control_detuning_;
    double coupling_; ///< d0^2 |A . e|^2 of the probed channel
};

/// One-shot helpers matching the sweep methods (they rebuild the
/// factorization each call; prefer CrossSectionSweep for spectra).
complex forward_amplitude(double probe_detuning, const EffectiveHamiltonian& hamiltonian,
                          const AtomConfiguration& config, const ModelParams& params,
                          const SweepOptions& options = {});
double total_cross_section(double probe_detuning, const EffectiveHamiltonian& hamiltonian,
                           const AtomConfiguration& config, const ModelParams& params,
                           const SweepOptions& options = {});

/// Assembles basis + Hamiltonian from a configuration and sweeps a grid.
std::vector<double> cross_section_spectrum(const FrequencyGrid& grid,
                                           const AtomConfiguration& config,
                                           const ModelParams& params,
                                           const SweepOptions& options = {});

} // namespace eitsim
