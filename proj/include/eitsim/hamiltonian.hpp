#pragma once

#include <Eigen/Dense>

#include "eitsim/basis.hpp"
#include "eitsim/configuration.hpp"
#include "eitsim/level.hpp"
#include "eitsim/params.hpp"

namespace eitsim {

/// Non-Hermitian effective Hamiltonian over the restricted basis, in
/// units of hbar*gamma and measured relative to hbar*omega0.  All of its
/// eigenvalues lie in the lower half-plane (every collective mode
/// decays), and it is complex symmetric under the reciprocity pairing
/// that also time-reverses the magnetic configurations:
///
///   s(mu) s(mu') H[(a,mu),(b,mu')] = H[(b,T mu'),(a,T mu)],
///
/// with T mu the sublevel-negated configuration and s(mu) its
/// time-reversal sign (see RestrictedBasis).
struct EffectiveHamiltonian {
    RestrictedBasis basis;
    Eigen::MatrixXcd matrix;
};

/// Dipole-dipole coupling element between atoms a and b: the amplitude
/// for the excitation to hop between them while b ends in ground
/// sublevel m_out and a started in m_in,
///
///   -d0^2 * A(m_in)^T G(R_ab) conj(A(m_out)),
///
/// with A(m) the absorption vector of channel m and G the free-space
/// dipole dyadic evaluated at resonance (on-shell approximation).  The
/// value does not depend on the order of a and b (G is even in R), and
/// reciprocity relates the channel swap to the time-reversed channels:
/// value(m_out, m_in) = (-1)^(m_out - m_in) * value(-m_in, -m_out).
complex self_energy_pair(int a, int b, int m_out, int m_in, const AtomConfiguration& config,
                         const LevelScheme& scheme = {});

/// Assembles the restricted-basis effective Hamiltonian.
///
/// Diagonal: -i/2 (the renormalized single-atom self-energy; the free
/// Lamb shift is absorbed into omega0).  Off-diagonal elements connect
/// states (a,mu) and (b,mu') when the spectator bookkeeping of the two
/// cluster projections is consistent:
///   - b's sublevel in (a,mu) is the hop's m_out (forced to +1 when b is
///     outside a's cluster), and a's sublevel in (b,mu') is m_in (forced
///     to +1 when a is outside b's cluster);
///   - atoms tracked by one cluster only must sit in +1 there, and atoms
///     tracked by both clusters must agree.
/// The control dressing is not part of the matrix; it enters the
/// resolvent as the scalar shift s(Delta) on every basis state.
EffectiveHamiltonian assemble_hamiltonian(const RestrictedBasis& basis,
                                          const AtomConfiguration& config,
                                          const ModelParams& params,
                                          const LevelScheme& scheme = {});

} // namespace eitsim
