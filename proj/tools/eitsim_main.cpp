#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eitsim/errors.hpp"
#include "eitsim/manifest.hpp"
#include "eitsim/runner.hpp"

namespace {

void write_error_record(const std::filesystem::path& out_dir, const std::string& type,
                        const std::string& message)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        return;
    std::ofstream out(out_dir / "error.json");
    if (out)
        out << nlohmann::json{{"error_type", type}, {"message", message}}.dump(2) << '\n';
}

int default_workers()
{
    if (const char* env = std::getenv("EITSIM_WORKERS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (...) {
            std::cerr << "eitsim: ignoring invalid EITSIM_WORKERS value\n";
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{std::string(eitsim::tool_name) + " " + eitsim::tool_version
                 + " - coherent light transport through dense disordered "
                   "ensembles of Lambda-type atoms"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::string seed_list;
    std::string grid_spec;
    int workers = default_workers();

    const std::vector<std::string> commands = {"susceptibility", "transmission", "pulse",
                                               "xsection", "compare", "converge"};
    for (const auto& name : commands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("--out", out_dir, "output directory (created if missing)");
        sub->add_option("--seed-list", seed_list, "comma-separated seeds overriding the config");
        sub->add_option("--workers", workers, "worker threads (env EITSIM_WORKERS)");
        sub->add_option("--grid", grid_spec, "frequency grid min:max:points");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        eitsim::RunConfig cfg = eitsim::load_run_config(config_path);

        if (!grid_spec.empty()) {
            eitsim::FrequencyGrid g;
            if (std::sscanf(grid_spec.c_str(), "%lg:%lg:%d", &g.min, &g.max, &g.points) != 3)
                throw eitsim::config_error("--grid expects min:max:points");
            g.validate();
            cfg.grid = g;
            cfg.resolved["grid"] = {{"min", g.min}, {"max", g.max}, {"points", g.points}};
        }
        if (!seed_list.empty()) {
            std::vector<std::uint64_t> seeds;
            std::stringstream ss(seed_list);
            std::string item;
            while (std::getline(ss, item, ','))
                seeds.push_back(std::stoull(item));
            if (seeds.empty())
                throw eitsim::config_error("--seed-list is empty");
            cfg.seeds = seeds;
            cfg.resolved["seeds"] = seeds;
        }

        eitsim::run_command(command, cfg, out_dir, std::max(1, workers));
        return 0;
    } catch (const eitsim::config_error& err) {
        std::cerr << "eitsim: config error: " << err.what() << '\n';
        write_error_record(out_dir, "config", err.what());
        return 2;
    } catch (const eitsim::solver_error& err) {
        std::cerr << "eitsim: solver error: " << err.what() << '\n';
        write_error_record(out_dir, "solver", err.what());
        return 3;
    } catch (const eitsim::resource_error& err) {
        std::cerr << "eitsim: resource cap: " << err.what() << '\n';
        write_error_record(out_dir, "resource", err.what());
        return 4;
    } catch (const std::exception& err) {
        std::cerr << "eitsim: " << err.what() << '\n';
        write_error_record(out_dir, "internal", err.what());
        return 1;
    }
}
