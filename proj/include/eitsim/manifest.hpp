#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eitsim/grid.hpp"
#include "eitsim/params.hpp"

namespace eitsim {

inline constexpr const char* tool_name = "eitsim";
inline constexpr const char* tool_version = "0.1.0";

/// Everything needed to reproduce a run byte for byte (given the same
/// build): the fully resolved configuration, the command, the grid and
/// the seed list.  The timestamp is informational and excluded from
/// reproducibility comparisons.
struct RunManifest {
    std::string command;
    nlohmann::json resolved_config;
    FrequencyGrid grid;
    std::vector<std::uint64_t> seeds;
    std::string output_dir;
    int workers = 1;
    std::string timestamp; // ISO-8601 UTC

    nlohmann::json to_json() const;
    void save(const std::filesystem::path& file) const;
};

nlohmann::json params_to_json(const ModelParams& params);
std::string iso8601_utc_now();

} // namespace eitsim
