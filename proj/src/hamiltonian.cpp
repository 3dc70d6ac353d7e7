#include "eitsim/hamiltonian.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <stdexcept>
#include <vector>

#include "eitsim/greens.hpp"
#include "eitsim/units.hpp"

namespace eitsim {

namespace {

// Coupling elements for all nine (m_out, m_in) channel pairs of one atom
// pair, indexed [m_out+1][m_in+1].
using PairBlock = std::array<std::array<complex, 3>, 3>;

PairBlock pair_block(const Eigen::Vector3d& separation, const LevelScheme& scheme)
{
    const Eigen::Matrix3cd g = greens_dyadic(separation);
    std::array<Eigen::Vector3cd, 3> absorb;
    for (int m = -1; m <= 1; ++m)
        absorb[static_cast<std::size_t>(m + 1)] = absorption_vector(m, scheme);

    PairBlock block;
    for (int m_out = -1; m_out <= 1; ++m_out)
        for (int m_in = -1; m_in <= 1; ++m_in) {
            const auto& in = absorb[static_cast<std::size_t>(m_in + 1)];
            const auto& out = absorb[static_cast<std::size_t>(m_out + 1)];
            block[static_cast<std::size_t>(m_out + 1)][static_cast<std::size_t>(m_in + 1)] =
                -units::dipole_sq * (in.transpose() * g * out.conjugate())(0, 0);
        }
    return block;
}

} // namespace

complex self_energy_pair(int a, int b, int m_out, int m_in, const AtomConfiguration& config,
                         const LevelScheme& scheme)
{
    if (a == b)
        throw std::invalid_argument("self_energy_pair: atoms must differ");
    const Eigen::Vector3d r = config.positions[static_cast<std::size_t>(a)]
        - config.positions[static_cast<std::size_t>(b)];
    const Eigen::Matrix3cd g = greens_dyadic(r);
    const Eigen::Vector3cd in = absorption_vector(m_in, scheme);
    const Eigen::Vector3cd out = absorption_vector(m_out, scheme);
    return -units::dipole_sq * (in.transpose() * g * out.conjugate())(0, 0);
}

EffectiveHamiltonian assemble_hamiltonian(const RestrictedBasis& basis,
                                          const AtomConfiguration& config,
                                          const ModelParams& params,
                                          const LevelScheme& scheme)
{
    const int n_atoms = basis.atom_count();
    if (static_cast<std::size_t>(n_atoms) != config.positions.size()
        || n_atoms != params.atom_count)
        throw std::invalid_argument("assemble_hamiltonian: basis, configuration and "
                                    "parameters describe different ensembles");

    const auto dim = static_cast<Eigen::Index>(basis.dim());
    EffectiveHamiltonian h{basis, Eigen::MatrixXcd::Zero(dim, dim)};
    h.matrix.diagonal().setConstant(complex(0.0, -0.5));

    std::vector<int> shared;
    std::vector<std::size_t> weight_a, weight_b;

    for (int a = 0; a < n_atoms; ++a) {
        const auto& nbr_a = basis.neighbors(a);
        for (int b = 0; b < n_atoms; ++b) {
            if (b == a)
                continue;
            const auto& nbr_b = basis.neighbors(b);
            const bool b_in_a = std::binary_search(nbr_a.begin(), nbr_a.end(), b);
            const bool a_in_b = std::binary_search(nbr_b.begin(), nbr_b.end(), a);

            shared.clear();
            std::set_intersection(nbr_a.begin(), nbr_a.end(), nbr_b.begin(), nbr_b.end(),
                                  std::back_inserter(shared));
            weight_a.clear();
            weight_b.clear();
            for (const int c : shared) {
                weight_a.push_back(basis.digit_weight(a, c));
                weight_b.push_back(basis.digit_weight(b, c));
            }

            const PairBlock block = pair_block(config.positions[static_cast<std::size_t>(a)]
                                                   - config.positions[static_cast<std::size_t>(b)],
                                               scheme);

            std::size_t shared_codes = 1;
            for (std::size_t i = 0; i < shared.size(); ++i)
                shared_codes *= 3;

            // Every atom not enumerated below is pinned to sublevel +1
            // (digit 0) on both sides, so only the consistent spectator
            // assignments are ever written.
            for (std::size_t code = 0; code < shared_codes; ++code) {
                std::size_t mu_a = 0, mu_b = 0;
                std::size_t rest = code;
                for (std::size_t i = 0; i < shared.size(); ++i) {
                    const std::size_t digit = rest % 3;
                    rest /= 3;
                    mu_a += weight_a[i] * digit;
                    mu_b += weight_b[i] * digit;
                }
                for (int m_out = (b_in_a ? -1 : 1); m_out <= 1; ++m_out) {
                    const std::size_t mu_a_full = mu_a
                        + (b_in_a ? basis.digit_weight(a, b)
                                  * static_cast<std::size_t>(RestrictedBasis::sublevel_to_digit(m_out))
                                  : 0);
                    for (int m_in = (a_in_b ? -1 : 1); m_in <= 1; ++m_in) {
                        const std::size_t mu_b_full = mu_b
                            + (a_in_b ? basis.digit_weight(b, a)
                                      * static_cast<std::size_t>(RestrictedBasis::sublevel_to_digit(m_in))
                                      : 0);
                        h.matrix(static_cast<Eigen::Index>(basis.index(a, mu_a_full)),
                                 static_cast<Eigen::Index>(basis.index(b, mu_b_full))) =
                            block[static_cast<std::size_t>(m_out + 1)]
                                 [static_cast<std::size_t>(m_in + 1)];
                    }
                }
            }
        }
    }
    return h;
}

} // namespace eitsim
