#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include <Eigen/Dense>

#include "eitsim/params.hpp"

namespace eitsim {

/// One random realization of atom positions in a cubic box.
struct AtomConfiguration {
    std::vector<Eigen::Vector3d> positions; ///< lambdabar units, inside [0, box_length]^3
    std::uint64_t seed = 0;
    double box_length = 0.0;
    /// Per atom, the indices of its (cluster_size - 1) nearest neighbors,
    /// stored sorted ascending by index.  Distance ties break toward the
    /// lower index.
    std::vector<std::vector<int>> neighbor_lists;
    int cluster_size = 1; ///< the n the stored neighbor lists were built for
};

/// Nearest-neighbor lists for cluster size n (n-1 neighbors per atom);
/// deterministic given the positions.
std::vector<std::vector<int>> compute_neighbor_lists(const std::vector<Eigen::Vector3d>& positions,
                                                     int cluster_size);

/// Draws atom_count i.i.d. uniform positions in the cubic box of edge
/// (N/density)^(1/3) from a seeded xoshiro-free mt19937_64 stream (53-bit
/// mantissa draws, so the layout is identical on every platform).  With
/// min_separation > 0 each atom is rejection-resampled individually
/// against the atoms already placed; this slightly biases late atoms
/// toward the remaining free volume, which is acceptable for the small
/// exclusion radii this knob is meant for.
AtomConfiguration sample_configuration(const ModelParams& params);

/// Writes positions as a CSV (x,y,z with 17 significant digits, so values
/// round-trip bit-exact).
void save_positions(const AtomConfiguration& config, const std::filesystem::path& file);

/// Reads positions back from a CSV produced by save_positions and restores
/// neighbor lists for the given cluster size.
AtomConfiguration load_positions(const std::filesystem::path& file, double box_length,
                                 std::uint64_t seed, int cluster_size);

} // namespace eitsim
