#include "eitsim/basis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "eitsim/errors.hpp"

namespace eitsim {

RestrictedBasis::RestrictedBasis(std::vector<std::vector<int>> neighbor_lists, int cluster_size)
    : neighbors_(std::move(neighbor_lists)), cluster_size_(cluster_size)
{
    magnetic_states_ = 1;
    for (int i = 1; i < cluster_size_; ++i)
        magnetic_states_ *= 3;
    for (std::size_t a = 0; a < neighbors_.size(); ++a) {
        const auto& list = neighbors_[a];
        if (static_cast<int>(list.size()) != cluster_size_ - 1)
            throw std::invalid_argument("RestrictedBasis: neighbor list size mismatch");
        if (!std::is_sorted(list.begin(), list.end()))
            throw std::invalid_argument("RestrictedBasis: neighbor lists must be sorted");
    }
}

std::size_t RestrictedBasis::digit_weight(int atom, int neighbor) const
{
    const auto& list = neighbors_[static_cast<std::size_t>(atom)];
    const auto it = std::lower_bound(list.begin(), list.end(), neighbor);
    if (it == list.end() || *it != neighbor)
        throw std::invalid_argument("RestrictedBasis: atom is not in the neighbor list");
    // first neighbor is the most significant digit
    const auto pos = static_cast<std::size_t>(std::distance(list.begin(), it));
    std::size_t w = 1;
    for (std::size_t j = pos + 1; j < list.size(); ++j)
        w *= 3;
    return w;
}

std::size_t RestrictedBasis::time_reversed_code(std::size_t mu) const
{
    std::size_t reversed = 0;
    std::size_t weight = 1;
    for (int j = 0; j < cluster_size_ - 1; ++j) {
        reversed += weight * (2 - mu % 3);
        mu /= 3;
        weight *= 3;
    }
    return reversed;
}

int RestrictedBasis::time_reversal_sign(std::size_t mu) const
{
    int sum = 0; // sum of sublevels m = 1 - digit
    for (int j = 0; j < cluster_size_ - 1; ++j) {
        sum += 1 - static_cast<int>(mu % 3);
        mu /= 3;
    }
    return (sum % 2 == 0) ? 1 : -1;
}

RestrictedBasis build_basis(const AtomConfiguration& config, int cluster_size,
                            std::size_t dimension_cap)
{
    const int n_atoms = static_cast<int>(config.positions.size());
    if (cluster_size < 1 || cluster_size > n_atoms)
        throw std::invalid_argument("build_basis: cluster size out of range");

    std::size_t dim = static_cast<std::size_t>(n_atoms);
    for (int i = 1; i < cluster_size; ++i) {
        if (dim > dimension_cap / 3 + 1)
            dim = dimension_cap + 1; // saturate, avoid overflow
        else
            dim *= 3;
    }
    if (dim > dimension_cap) {
        std::ostringstream msg;
        msg << "build_basis: restricted-basis dimension N*3^(n-1) = " << n_atoms << "*3^"
            << (cluster_size - 1) << " exceeds the cap " << dimension_cap;
        throw resource_error(msg.str());
    }

    if (config.cluster_size == cluster_size
        && static_cast<int>(config.neighbor_lists.size()) == n_atoms)
        return RestrictedBasis(config.neighbor_lists, cluster_size);
    return RestrictedBasis(compute_neighbor_lists(config.positions, cluster_size), cluster_size);
}

} // namespace eitsim
