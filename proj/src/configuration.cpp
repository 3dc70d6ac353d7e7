#include "eitsim/configuration.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "eitsim/errors.hpp"

namespace eitsim {

std::vector<std::vector<int>> compute_neighbor_lists(const std::vector<Eigen::Vector3d>& positions,
                                                     int cluster_size)
{
    const int n_atoms = static_cast<int>(positions.size());
    if (cluster_size < 1 || cluster_size > n_atoms)
        throw std::invalid_argument("compute_neighbor_lists: cluster size out of range");

    std::vector<std::vector<int>> lists(positions.size());
    std::vector<std::pair<double, int>> order;
    for (int a = 0; a < n_atoms; ++a) {
        order.clear();
        for (int b = 0; b < n_atoms; ++b) {
            if (b == a)
                continue;
            order.emplace_back((positions[static_cast<std::size_t>(b)]
                                - positions[static_cast<std::size_t>(a)]).squaredNorm(), b);
        }
        // ties break toward the lower index via the pair's second member
        std::sort(order.begin(), order.end());
        auto& list = lists[static_cast<std::size_t>(a)];
        list.reserve(static_cast<std::size_t>(cluster_size - 1));
        for (int j = 0; j < cluster_size - 1; ++j)
            list.push_back(order[static_cast<std::size_t>(j)].second);
        std::sort(list.begin(), list.end());
    }
    return lists;
}

namespace {

// Uniform double in [0, 1) built from the top 53 bits of the generator
// output; identical across platforms for a given seed.
double uniform53(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

AtomConfiguration sample_configuration(const ModelParams& params)
{
    check_params(params);

    AtomConfiguration config;
    config.seed = params.seed;
    config.box_length = params.box_length();
    config.cluster_size = params.neighbor_count;
    config.positions.reserve(static_cast<std::size_t>(params.atom_count));

    std::mt19937_64 rng(params.seed);
    const double min_sep2 = params.min_separation * params.min_separation;
    constexpr int max_attempts = 1000000;

    for (int a = 0; a < params.atom_count; ++a) {
        int attempts = 0;
        while (true) {
            if (++attempts > max_attempts) {
                std::ostringstream msg;
                msg << "sample_configuration: could not place atom " << a << " after "
                    << max_attempts << " attempts (min_separation " << params.min_separation
                    << " too dense for box " << config.box_length << ")";
                throw solver_error(msg.str());
            }
            Eigen::Vector3d r(uniform53(rng) * config.box_length,
                              uniform53(rng) * config.box_length,
                              uniform53(rng) * config.box_length);
            bool ok = true;
            if (min_sep2 > 0.0) {
                for (const auto& other : config.positions) {
                    if ((r - other).squaredNorm() < min_sep2) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                config.positions.push_back(r);
                break;
            }
        }
    }

    config.neighbor_lists = compute_neighbor_lists(config.positions, params.neighbor_count);
    return config;
}

void save_positions(const AtomConfiguration& config, const std::filesystem::path& file)
{
    std::ofstream out(file);
    if (!out)
        throw config_error("save_positions: cannot open " + file.string());
    out << "x,y,z\n";
    char buf[96];
    for (const auto& r : config.positions) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", r.x(), r.y(), r.z());
        out << buf;
    }
}

AtomConfiguration load_positions(const std::filesystem::path& file, double box_length,
                                 std::uint64_t seed, int cluster_size)
{
    std::ifstream in(file);
    if (!in)
        throw config_error("load_positions: cannot open " + file.string());

    AtomConfiguration config;
    config.seed = seed;
    config.box_length = box_length;
    config.cluster_size = cluster_size;

    std::string line;
    if (!std::getline(in, line) || line.rfind("x,y,z", 0) != 0)
        throw config_error("load_positions: missing x,y,z header in " + file.string());
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        Eigen::Vector3d r;
        if (std::sscanf(line.c_str(), "%lg,%lg,%lg", &r.x(), &r.y(), &r.z()) != 3)
            throw config_error("load_positions: malformed row \"" + line + "\"");
        config.positions.push_back(r);
    }
    config.neighbor_lists = compute_neighbor_lists(config.positions, cluster_size);
    return config;
}

} // namespace eitsim
