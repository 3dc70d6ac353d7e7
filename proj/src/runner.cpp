#include "eitsim/runner.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "eitsim/configuration.hpp"
#include "eitsim/cross_section.hpp"
#include "eitsim/csv.hpp"
#include "eitsim/errors.hpp"
#include "eitsim/manifest.hpp"
#include "eitsim/pulse.hpp"
#include "eitsim/slab.hpp"
#include "eitsim/susceptibility.hpp"
#include "eitsim/validation.hpp"

namespace eitsim {

namespace {

nlohmann::json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot read config file " + path.string());
    try {
        return nlohmann::json::parse(in, nullptr, true, true); // allow // comments
    } catch (const nlohmann::json::parse_error& err) {
        throw config_error("config " + path.string() + ": " + err.what());
    }
}

void check_known_keys(const nlohmann::json& obj, const std::set<std::string>& known,
                      const std::string& where)
{
    for (const auto& [key, value] : obj.items()) {
        if (key.rfind("_", 0) == 0)
            continue;
        if (!known.count(key))
            throw config_error(where + ": unknown key \"" + key + "\"");
    }
}

SweepStrategy parse_strategy(const std::string& name)
{
    if (name == "auto")
        return SweepStrategy::automatic;
    if (name == "eigendecomposition")
        return SweepStrategy::eigendecomposition;
    if (name == "hessenberg")
        return SweepStrategy::hessenberg;
    if (name == "direct")
        return SweepStrategy::direct;
    throw config_error("sweep_strategy: unknown strategy \"" + name + "\"");
}

void write_json(const nlohmann::json& j, const std::filesystem::path& file)
{
    std::ofstream out(file);
    if (!out)
        throw config_error("cannot open output file " + file.string());
    out << j.dump(2) << '\n';
}

} // namespace

ModelParams apply_overrides(const ModelParams& base, const nlohmann::json& overrides)
{
    nlohmann::json merged = params_to_json(base);
    for (const auto& [key, value] : overrides.items())
        merged[key] = value;
    return validate_params(merged);
}

RunConfig load_run_config(const std::filesystem::path& config_path)
{
    const nlohmann::json raw = read_json_file(config_path);
    if (!raw.is_object())
        throw config_error("config " + config_path.string() + ": expected a JSON object");
    check_known_keys(raw,
                     {"params", "grid", "seeds", "n_values", "pulse", "variants",
                      "sweep_strategy", "eigen_dim_cap"},
                     "config");

    RunConfig cfg;
    cfg.params = validate_params(raw.value("params", nlohmann::json::object()));

    if (raw.contains("grid")) {
        const auto& g = raw.at("grid");
        check_known_keys(g, {"min", "max", "points"}, "grid");
        cfg.grid.min = g.value("min", cfg.grid.min);
        cfg.grid.max = g.value("max", cfg.grid.max);
        cfg.grid.points = g.value("points", cfg.grid.points);
    }
    cfg.grid.validate();

    if (raw.contains("seeds")) {
        if (!raw.at("seeds").is_array() || raw.at("seeds").empty())
            throw config_error("seeds: expected a non-empty array");
        for (const auto& s : raw.at("seeds")) {
            if (!s.is_number_integer() && !s.is_number_unsigned())
                throw config_error("seeds: expected integers");
            const auto v = s.get<std::int64_t>();
            if (v < 0)
                throw config_error("seeds: expected non-negative integers");
            cfg.seeds.push_back(static_cast<std::uint64_t>(v));
        }
    } else {
        cfg.seeds = {cfg.params.seed};
    }

    if (raw.contains("n_values")) {
        if (!raw.at("n_values").is_array() || raw.at("n_values").empty())
            throw config_error("n_values: expected a non-empty array");
        for (const auto& n : raw.at("n_values"))
            cfg.n_values.push_back(n.get<int>());
    } else {
        for (int n = 1; n <= cfg.params.neighbor_count; ++n)
            cfg.n_values.push_back(n);
    }

    if (raw.contains("pulse")) {
        const auto& p = raw.at("pulse");
        check_known_keys(p, {"tau", "carrier_detuning", "span", "t_center", "samples"}, "pulse");
        cfg.pulse.tau = p.value("tau", cfg.pulse.tau);
        cfg.pulse.carrier_detuning = p.value("carrier_detuning", cfg.pulse.carrier_detuning);
        if (p.contains("span"))
            cfg.pulse.span = p.at("span").get<double>();
        if (p.contains("t_center"))
            cfg.pulse.t_center = p.at("t_center").get<double>();
        cfg.pulse.samples = p.value("samples", cfg.pulse.samples);
        if (!(cfg.pulse.tau > 0.0))
            throw config_error("pulse.tau must be positive");
    }

    if (raw.contains("sweep_strategy"))
        cfg.sweep.strategy = parse_strategy(raw.at("sweep_strategy").get<std::string>());
    if (raw.contains("eigen_dim_cap"))
        cfg.sweep.eigen_dim_cap = raw.at("eigen_dim_cap").get<std::size_t>();

    if (raw.contains("variants")) {
        if (!raw.at("variants").is_array() || raw.at("variants").empty())
            throw config_error("variants: expected a non-empty array");
        std::set<std::string> names;
        for (const auto& v : raw.at("variants")) {
            check_known_keys(v, {"name", "params"}, "variant");
            if (!v.contains("name"))
                throw config_error("variants: every variant needs a name");
            const auto name = v.at("name").get<std::string>();
            if (!names.insert(name).second)
                throw config_error("variants: duplicate name \"" + name + "\"");
            apply_overrides(cfg.params, v.value("params", nlohmann::json::object()));
            cfg.variants.emplace_back(name, v.value("params", nlohmann::json::object()));
        }
    }

    cfg.resolved = {
        {"params", params_to_json(cfg.params)},
        {"grid", {{"min", cfg.grid.min}, {"max", cfg.grid.max}, {"points", cfg.grid.points}}},
        {"seeds", cfg.seeds},
        {"n_values", cfg.n_values},
        {"pulse",
         {{"tau", cfg.pulse.tau},
          {"carrier_detuning", cfg.pulse.carrier_detuning},
          {"span", cfg.pulse.span.value_or(32.0 * cfg.pulse.tau)},
          {"t_center", cfg.pulse.t_center.value_or(cfg.pulse.span.value_or(32.0 * cfg.pulse.tau) / 4.0)},
          {"samples", cfg.pulse.samples}}},
    };
    if (!cfg.variants.empty()) {
        nlohmann::json variants = nlohmann::json::array();
        for (const auto& [name, overrides] : cfg.variants)
            variants.push_back({{"name", name}, {"params", overrides}});
        cfg.resolved["variants"] = variants;
    }
    return cfg;
}

namespace {

void run_susceptibility(const ModelParams& params, const RunConfig& cfg,
                        const std::filesystem::path& dir, int workers)
{
    const auto chi = chi_spectrum(cfg.grid, params, workers);
    write_susceptibility_csv(chi, dir / "chi.csv");
}

void run_transmission(const ModelParams& params, const RunConfig& cfg,
                      const std::filesystem::path& dir, int workers)
{
    const auto chi = chi_spectrum(cfg.grid, params, workers);
    write_susceptibility_csv(chi, dir / "chi.csv");
    write_transmission_csv(transmission_spectrum(chi, params.slab_length),
                           dir / "transmission.csv");
}

void run_pulse(const ModelParams& params, const RunConfig& cfg,
               const std::filesystem::path& dir, int workers)
{
    const auto chi = chi_spectrum(cfg.grid, params, workers);
    const auto tr = transmission_spectrum(chi, params.slab_length);
    write_transmission_csv(tr, dir / "transmission.csv");

    const double span = cfg.pulse.span.value_or(32.0 * cfg.pulse.tau);
    const double t_center = cfg.pulse.t_center.value_or(span / 4.0);
    const PulseTrace input = gaussian_pulse(0.0, span, cfg.pulse.samples, t_center,
                                            cfg.pulse.tau, cfg.pulse.carrier_detuning);
    // the medium response is solved exactly at every spectral bin; the
    // configured grid acts as the declared support band
    const auto transfer = [&](double detuning) {
        return transmission(detuning, solve_chi(detuning, params).chi, params.slab_length)
            .amplitude;
    };
    const PulseTrace output = propagate_pulse(input, transfer, cfg.grid.min, cfg.grid.max);
    const PulseMetrics metrics = pulse_metrics(input, output);

    write_pulse_csv(input, dir / "pulse_in.csv");
    write_pulse_csv(output, dir / "pulse_out.csv");
    write_json(
        {
            {"delay", metrics.delay},
            {"peak_delay", metrics.peak_delay},
            {"efficiency", metrics.efficiency},
            {"broadening", metrics.broadening},
            {"input_duration_fwhm", metrics.input_duration},
            {"delay_over_duration", metrics.delay / metrics.input_duration},
            {"group_delay_at_carrier", group_delay(tr, cfg.pulse.carrier_detuning)},
        },
        dir / "pulse_metrics.json");
}

void run_xsection(const ModelParams& params, const RunConfig& cfg,
                  const std::filesystem::path& dir, int /*workers*/)
{
    const AtomConfiguration config = sample_configuration(params);
    const auto q0 = cross_section_spectrum(cfg.grid, config, params, cfg.sweep);
    write_cross_section_csv(cfg.grid.values(), q0, dir / "xsection.csv");
    save_positions(config, dir / "positions.csv");
    write_json(params_to_json(params), dir / "xsection_meta.json");
}

void run_compare(const ModelParams& params, const RunConfig& cfg,
                 const std::filesystem::path& dir, int workers)
{
    ComparisonReport report = ensemble_average(cfg.seeds, cfg.grid, params, cfg.sweep, workers);

    const double box = params.box_length();
    const auto chi = chi_spectrum(cfg.grid, params, workers);
    const auto tr = transmission_spectrum(chi, box);
    report.babinet = babinet_estimate(tr, box);
    report.dilute = dilute_reference(cfg.grid, params, cfg.sweep);

    const PeakInfo q0_peak = find_peak(report.detuning, report.q0_mean);
    const double babinet_at_peak = report.babinet[static_cast<std::size_t>(q0_peak.index)];
    const PeakInfo dilute_peak = find_peak(report.detuning, report.dilute);
    report.summary["box_length"] = box;
    report.summary["babinet_at_peak"] = babinet_at_peak;
    report.summary["babinet_peak_ratio"] =
        babinet_at_peak != 0.0 ? q0_peak.value / babinet_at_peak : 0.0;
    report.summary["babinet_relative_deviation"] =
        q0_peak.value != 0.0 ? std::abs(q0_peak.value - babinet_at_peak) / q0_peak.value : 0.0;
    report.summary["dilute_peak"] = dilute_peak.value;
    report.summary["dilute_peak_ratio"] =
        dilute_peak.value != 0.0 ? q0_peak.value / dilute_peak.value : 0.0;
    report.save(dir);
}

void run_converge(const ModelParams& params, const RunConfig& cfg,
                  const std::filesystem::path& dir, int /*workers*/)
{
    const AtomConfiguration config = sample_configuration(params);
    const ComparisonReport report =
        convergence_study(config, cfg.n_values, cfg.grid, params, cfg.sweep);
    report.save(dir);
    save_positions(config, dir / "positions.csv");
}

} // namespace

void run_command(const std::string& command, const RunConfig& cfg,
                 const std::filesystem::path& output_dir, int workers)
{
    using Command = void (*)(const ModelParams&, const RunConfig&,
                             const std::filesystem::path&, int);
    Command fn = nullptr;
    if (command == "susceptibility")
        fn = run_susceptibility;
    else if (command == "transmission")
        fn = run_transmission;
    else if (command == "pulse")
        fn = run_pulse;
    else if (command == "xsection")
        fn = run_xsection;
    else if (command == "compare")
        fn = run_compare;
    else if (command == "converge")
        fn = run_converge;
    else
        throw config_error("unknown command \"" + command + "\"");

    std::filesystem::create_directories(output_dir);

    if (cfg.variants.empty()) {
        fn(cfg.params, cfg, output_dir, workers);
    } else {
        for (const auto& [name, overrides] : cfg.variants) {
            const auto dir = output_dir / name;
            std::filesystem::create_directories(dir);
            fn(apply_overrides(cfg.params, overrides), cfg, dir, workers);
        }
    }

    RunManifest manifest;
    manifest.command = command;
    manifest.resolved_config = cfg.resolved;
    manifest.grid = cfg.grid;
    manifest.seeds = cfg.seeds;
    manifest.output_dir = output_dir.string();
    manifest.workers = workers;
    manifest.timestamp = iso8601_utc_now();
    manifest.save(output_dir / "manifest.json");
}

} // namespace eitsim
