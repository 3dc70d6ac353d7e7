#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eitsim/grid.hpp"
#include "eitsim/params.hpp"
#include "eitsim/resolvent.hpp"

namespace eitsim {

/// Pulse description of the `pulse` command; times in 1/gamma.
struct PulseSpec {
    double tau = 16.0;              ///< Gaussian width (intensity FWHM = 2*sqrt(ln2)*tau)
    double carrier_detuning = 0.0;  ///< pulse carrier relative to the bare resonance
    std::optional<double> span;     ///< time window; default 32*tau
    std::optional<double> t_center; ///< input peak position; default span/4
    int samples = 4096;             ///< power of two
};

/// A fully parsed run configuration: the validated parameters plus the
/// command-level sections (grid, seeds, pulse, n values, variants).
struct RunConfig {
    ModelParams params;
    FrequencyGrid grid;
    std::vector<std::uint64_t> seeds; ///< defaults to {params.seed}
    std::vector<int> n_values;        ///< defaults to {1..params.neighbor_count}
    PulseSpec pulse;
    SweepOptions sweep;
    /// (name, params-override) pairs; empty means one unnamed variant.
    std::vector<std::pair<std::string, nlohmann::json>> variants;
    nlohmann::json resolved; ///< the resolved config recorded in the manifest
};

RunConfig load_run_config(const std::filesystem::path& config_path);

/// Applies a variant's parameter overrides.
ModelParams apply_overrides(const ModelParams& base, const nlohmann::json& overrides);

/// Executes one CLI command end to end: computes, writes the CSV/JSON
/// outputs into output_dir and records the run manifest.  Commands:
/// susceptibility, transmission, pulse, xsection, compare, converge.
void run_command(const std::string& command, const RunConfig& config,
                 const std::filesystem::path& output_dir, int workers);

} // namespace eitsim
