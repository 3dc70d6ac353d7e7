#pragma once

#include <cstddef>
#include <vector>

#include "eitsim/configuration.hpp"

namespace eitsim {

/// Single-excitation basis restricted to recurrent clusters: a state is
/// (a, mu) where atom a is excited and mu assigns a ground sublevel
/// M0 in {-1,0,+1} to each of a's (n-1) nearest neighbors.  Every atom
/// outside the cluster is implicitly in M0 = +1, the initially populated
/// sublevel.  Dimension = N * 3^(n-1).
///
/// Ordering: excited-atom index ascending; within one atom, mu runs in
/// lexicographic order over the neighbor list sorted ascending by index,
/// with the sublevel order (+1, 0, -1) per digit.  The first state of
/// every atom block (digit string 0) is the elastic all-+1 state.
class RestrictedBasis {
public:
    RestrictedBasis(std::vector<std::vector<int>> neighbor_lists, int cluster_size);

    int atom_count() const { return static_cast<int>(neighbors_.size()); }
    int cluster_size() const { return cluster_size_; }
    std::size_t magnetic_states() const { return magnetic_states_; } // 3^(n-1)
    std::size_t dim() const { return static_cast<std::size_t>(atom_count()) * magnetic_states_; }

    const std::vector<int>& neighbors(int atom) const
    {
        return neighbors_[static_cast<std::size_t>(atom)];
    }

    /// Index of the state with excited atom a and magnetic code mu
    /// (base-3 digits over the sorted neighbor list, first neighbor most
    /// significant; digit value 0,1,2 for sublevel +1,0,-1).
    std::size_t index(int atom, std::size_t mu) const
    {
        return static_cast<std::size_t>(atom) * magnetic_states_ + mu;
    }

    /// Index of the elastic state of atom a (all neighbors in +1).
    std::size_t elastic_index(int atom) const { return index(atom, 0); }

    /// Base-3 weight of a given neighbor inside an atom's code, i.e. the
    /// code increment that raises that neighbor's digit by one.
    std::size_t digit_weight(int atom, int neighbor) const;

    /// Magnetic code with every sublevel negated (m -> -m), the
    /// time-reversed configuration.
    std::size_t time_reversed_code(std::size_t mu) const;

    /// Sign (-1)^(sum of sublevels in mu).  Together with
    /// time_reversed_code this realizes the reciprocity pairing of the
    /// effective Hamiltonian: sign(mu) sign(mu') H[(a,mu),(b,mu')] =
    /// H[(b,T mu'),(a,T mu)].
    int time_reversal_sign(std::size_t mu) const;

    static int sublevel_to_digit(int m) { return 1 - m; }
    static int digit_to_sublevel(int digit) { return 1 - digit; }

private:
    std::vector<std::vector<int>> neighbors_;
    int cluster_size_;
    std::size_t magnetic_states_;
};

/// Builds the restricted basis for the configuration's positions with
/// cluster size n, recomputing neighbor lists when the stored ones were
/// built for a different n.  Fails if N*3^(n-1) exceeds the cap.
RestrictedBasis build_basis(const AtomConfiguration& config, int cluster_size,
                            std::size_t dimension_cap = 200000);

} // namespace eitsim
