#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace eitsim {

/// Physical and numerical parameters of a run, all dimensionless
/// (frequencies in gamma, lengths in lambdabar).
struct ModelParams {
    double density = 1.0;          ///< n0 * lambdabar^3
    double rabi_control = 0.0;     ///< Omega_c / gamma
    double control_detuning = 0.0; ///< (omega_c - omega0) / gamma
    double slab_length = 1.0;      ///< L / lambdabar; cubic-box length unless overridden
    int atom_count = 1;            ///< N
    int neighbor_count = 1;        ///< n, atoms in the recurrent cluster incl. the excited one
    double min_separation = 0.0;   ///< optional pair exclusion radius / lambdabar
    std::uint64_t seed = 1;
    std::size_t basis_cap = 200000; ///< guard on the restricted-basis dimension

    /// Cubic-box edge (N/n0)^(1/3) for the current N and density.
    double box_length() const;
};

/// Validates a raw JSON configuration object and fills defaults.  Derived
/// quantities (slab_length from N and density) are computed when absent.
/// Unknown keys outside the documented schema are rejected.
ModelParams validate_params(const nlohmann::json& raw);

/// In-memory validation of an already-populated parameter set.
void check_params(const ModelParams& params);

} // namespace eitsim
