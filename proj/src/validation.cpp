#include "eitsim/validation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <thread>

#include "eitsim/csv.hpp"
#include "eitsim/errors.hpp"

namespace eitsim {

void ComparisonReport::save(const std::filesystem::path& directory) const
{
    std::filesystem::create_directories(directory);
    for (const auto& [name, values] : series)
        write_cross_section_csv(detuning, values, directory / (name + ".csv"));
    if (!q0_mean.empty()) {
        write_table_csv({"detuning", "q0_mean", "q0_std"},
                        [&] {
                            std::vector<std::vector<double>> rows;
                            for (std::size_t i = 0; i < q0_mean.size(); ++i)
                                rows.push_back({detuning[i], q0_mean[i], q0_std[i]});
                            return rows;
                        }(),
                        directory / "q0_ensemble.csv");
    }
    if (!babinet.empty())
        write_cross_section_csv(detuning, babinet, directory / "babinet.csv");
    if (!dilute.empty())
        write_cross_section_csv(detuning, dilute, directory / "dilute_reference.csv");

    std::ofstream out(directory / "summary.json");
    if (!out)
        throw config_error("cannot open " + (directory / "summary.json").string());
    out << summary.dump(2) << '\n';
}

std::vector<double> babinet_estimate(const std::vector<TransmissionPoint>& transmission,
                                     double box_length)
{
    std::vector<double> q(transmission.size());
    const double area = box_length * box_length;
    for (std::size_t i = 0; i < transmission.size(); ++i)
        q[i] = 2.0 * area * (1.0 - std::norm(transmission[i].amplitude));
    return q;
}

std::vector<double> dilute_reference(const FrequencyGrid& grid, const ModelParams& params,
                                     const SweepOptions& options)
{
    ModelParams single = params;
    single.atom_count = 1;
    single.neighbor_count = 1;
    const AtomConfiguration config = sample_configuration(single);
    std::vector<double> q = cross_section_spectrum(grid, config, single, options);
    for (auto& v : q)
        v *= static_cast<double>(params.atom_count);
    return q;
}

PeakInfo find_peak(const std::vector<double>& detuning, const std::vector<double>& values)
{
    if (values.empty() || values.size() != detuning.size())
        throw std::invalid_argument("find_peak: bad series");
    const auto it = std::max_element(values.begin(), values.end());
    const auto i = static_cast<std::size_t>(std::distance(values.begin(), it));
    return {detuning[i], *it, static_cast<int>(i)};
}

namespace {

double peak_normalized_difference(const std::vector<double>& a, const std::vector<double>& b)
{
    double scale = 0.0;
    for (const double v : b)
        scale = std::max(scale, std::abs(v));
    if (scale == 0.0)
        return 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst / scale;
}

} // namespace

ComparisonReport convergence_study(const AtomConfiguration& config,
                                   const std::vector<int>& n_values, const FrequencyGrid& grid,
                                   const ModelParams& params, const SweepOptions& options)
{
    if (n_values.empty())
        throw std::invalid_argument("convergence_study: empty n list");
    if (!std::is_sorted(n_values.begin(), n_values.end()))
        throw std::invalid_argument("convergence_study: n values must be ascending");

    ComparisonReport report;
    report.grid = grid;
    report.detuning = grid.values();

    for (const int n : n_values) {
        ModelParams p = params;
        p.neighbor_count = n;
        report.series["q0_n" + std::to_string(n)] = cross_section_spectrum(grid, config, p, options);
    }

    // consecutive-n difference table, normalized to the larger-n peak
    nlohmann::json diffs = nlohmann::json::object();
    std::vector<double> consecutive;
    for (std::size_t i = 0; i + 1 < n_values.size(); ++i) {
        const auto& a = report.series.at("q0_n" + std::to_string(n_values[i]));
        const auto& b = report.series.at("q0_n" + std::to_string(n_values[i + 1]));
        const double d = peak_normalized_difference(a, b);
        consecutive.push_back(d);
        diffs["n" + std::to_string(n_values[i]) + "_vs_n" + std::to_string(n_values[i + 1])] = d;
    }
    report.summary["max_relative_difference"] = diffs;
    report.summary["monotone_convergence"] =
        std::is_sorted(consecutive.rbegin(), consecutive.rend());
    report.summary["seed"] = config.seed;
    report.summary["atom_count"] = config.positions.size();
    return report;
}

ComparisonReport ensemble_average(const std::vector<std::uint64_t>& seeds,
                                  const FrequencyGrid& grid, const ModelParams& params,
                                  const SweepOptions& options, int workers)
{
    if (seeds.empty())
        throw std::invalid_argument("ensemble_average: empty seed list");

    ComparisonReport report;
    report.grid = grid;
    report.detuning = grid.values();

    const std::size_t n_pts = report.detuning.size();
    std::vector<std::vector<double>> spectra(seeds.size());
    std::vector<std::string> failures(seeds.size());

    auto run_seed = [&](std::size_t i) {
        ModelParams p = params;
        p.seed = seeds[i];
        try {
            const AtomConfiguration config = sample_configuration(p);
            spectra[i] = cross_section_spectrum(grid, config, p, options);
        } catch (const std::exception& err) {
            failures[i] = err.what();
        }
    };

    if (workers <= 1 || seeds.size() == 1) {
        for (std::size_t i = 0; i < seeds.size(); ++i)
            run_seed(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int n_workers = std::min<int>(workers, static_cast<int>(seeds.size()));
        for (int w = 0; w < n_workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < seeds.size(); i = next.fetch_add(1))
                    run_seed(i);
            });
        for (auto& t : pool)
            t.join();
    }

    nlohmann::json failed = nlohmann::json::object();
    std::vector<const std::vector<double>*> good;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (!failures[i].empty())
            failed[std::to_string(seeds[i])] = failures[i];
        else {
            good.push_back(&spectra[i]);
            report.series["q0_seed" + std::to_string(seeds[i])] = spectra[i];
        }
    }
    if (good.empty())
        throw solver_error("ensemble_average: every seed failed; first error: "
                           + failures.front());

    report.q0_mean.assign(n_pts, 0.0);
    report.q0_std.assign(n_pts, 0.0);
    for (const auto* s : good)
        for (std::size_t i = 0; i < n_pts; ++i)
            report.q0_mean[i] += (*s)[i];
    for (auto& v : report.q0_mean)
        v /= static_cast<double>(good.size());
    if (good.size() > 1) {
        for (const auto* s : good)
            for (std::size_t i = 0; i < n_pts; ++i) {
                const double d = (*s)[i] - report.q0_mean[i];
                report.q0_std[i] += d * d;
            }
        for (auto& v : report.q0_std)
            v = std::sqrt(v / static_cast<double>(good.size() - 1));
    }

    const PeakInfo peak = find_peak(report.detuning, report.q0_mean);
    report.summary["failed_seeds"] = failed;
    report.summary["seed_count"] = seeds.size();
    report.summary["peak_detuning"] = peak.detuning;
    report.summary["peak_q0_mean"] = peak.value;
    report.summary["peak_q0_std"] = report.q0_std[static_cast<std::size_t>(peak.index)];
    report.summary["configuration_sensitivity"] =
        peak.value != 0.0 ? report.q0_std[static_cast<std::size_t>(peak.index)] / peak.value : 0.0;
    return report;
}

} // namespace eitsim
