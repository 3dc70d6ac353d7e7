#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eitsim/cross_section.hpp"
#include "eitsim/grid.hpp"
#include "eitsim/params.hpp"
#include "eitsim/slab.hpp"

namespace eitsim {

/// Cross-validation bundle: microscopic cross sections against the
/// macroscopic (Babinet-scaled) transmission and the dilute reference.
/// All series share one frequency grid.
struct ComparisonReport {
    FrequencyGrid grid;
    std::vector<double> detuning;
    /// Named cross-section series (one per n value, per seed, mean, ...).
    std::map<std::string, std::vector<double>> series;
    std::vector<double> q0_mean;
    std::vector<double> q0_std;
    std::vector<double> babinet;
    std::vector<double> dilute;
    nlohmann::json summary;

    /// One CSV per series plus summary.json.
    void save(const std::filesystem::path& directory) const;
};

/// Babinet estimate 2*L^2*(1 - |T|^2) of the total cross section of a
/// strongly absorbing slab with geometric cross-area L^2.
std::vector<double> babinet_estimate(const std::vector<TransmissionPoint>& transmission,
                                     double box_length);

/// Dilute-limit reference N * sigma1(Delta), with sigma1 the single-atom
/// cross section computed by the microscopic machinery itself (N = 1).
std::vector<double> dilute_reference(const FrequencyGrid& grid, const ModelParams& params,
                                     const SweepOptions& options = {});

/// Cross-section spectra of one fixed configuration for several cluster
/// sizes, with the pairwise max-relative-difference table (differences
/// are normalized to the peak of the larger-n spectrum).  Flags
/// non-monotone convergence in the summary instead of failing.
ComparisonReport convergence_study(const AtomConfiguration& config,
                                   const std::vector<int>& n_values, const FrequencyGrid& grid,
                                   const ModelParams& params, const SweepOptions& options = {});

/// Per-frequency mean and standard deviation of Q0 over seeded
/// configurations (sample standard deviation, zero for a single seed).
/// Failed seeds are recorded in the summary and excluded from the
/// statistics; the call fails only if every seed fails.
ComparisonReport ensemble_average(const std::vector<std::uint64_t>& seeds,
                                  const FrequencyGrid& grid, const ModelParams& params,
                                  const SweepOptions& options = {}, int workers = 1);

/// Peak value and peak position of a sampled spectrum.
struct PeakInfo {
    double detuning;
    double value;
    int index;
};
PeakInfo find_peak(const std::vector<double>& detuning, const std::vector<double>& values);

} // namespace eitsim
