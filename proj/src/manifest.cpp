#include "eitsim/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "eitsim/errors.hpp"

namespace eitsim {

nlohmann::json params_to_json(const ModelParams& p)
{
    return {
        {"density", p.density},
        {"rabi_control", p.rabi_control},
        {"control_detuning", p.control_detuning},
        {"slab_length", p.slab_length},
        {"atom_count", p.atom_count},
        {"neighbor_count", p.neighbor_count},
        {"min_separation", p.min_separation},
        {"seed", p.seed},
        {"basis_cap", p.basis_cap},
    };
}

std::string iso8601_utc_now()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::json RunManifest::to_json() const
{
    return {
        {"tool", tool_name},
        {"version", tool_version},
        {"command", command},
        {"resolved_config", resolved_config},
        {"grid", {{"min", grid.min}, {"max", grid.max}, {"points", grid.points}}},
        {"seeds", seeds},
        {"output_dir", output_dir},
        {"workers", workers},
        {"timestamp", timestamp},
    };
}

void RunManifest::save(const std::filesystem::path& file) const
{
    std::ofstream out(file);
    if (!out)
        throw config_error("cannot open manifest file " + file.string());
    out << to_json().dump(2) << '\n';
}

} // namespace eitsim
