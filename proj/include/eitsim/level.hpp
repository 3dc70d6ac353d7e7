#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace eitsim {

using complex = std::complex<double>;

// Level scheme: ground manifold F0=1 (sublevels M0 = -1, 0, +1), a single
// excited state F=0 (M=0).  Initially every atom occupies M0 = +1.  The
// sigma- probe drives M0=+1 <-> M=0; the two control modes drive the empty
// transitions, sigma+ from M0=-1 and pi from M0=0.  Selection rule for the
// spherical dipole components: q = -M0.
struct LevelScheme {
    static constexpr int ground_degeneracy = 3; // d_g
    static constexpr int excited_degeneracy = 1; // d_e

    /// Per-channel phase of <F=0,0| d_q |F0=1,m>, indexed by m = -1,0,+1.
    /// Default is the Condon-Shortley convention, (-1)^(1-m).
    std::array<double, 3> channel_phase{1.0, -1.0, 1.0}; // m = -1, 0, +1

    double phase(int m) const { return channel_phase[static_cast<std::size_t>(m + 1)]; }
};

/// Matrix element <F=0,M=0| d_q |F0=1,M0=m> in units of d0.
/// Nonzero (modulus 1) only when the selection rule q = -m holds.
complex dipole_component(int m_ground, int q, const LevelScheme& scheme = {});

/// Change of basis from spherical components (V_{-1}, V_0, V_{+1}) to
/// Cartesian (V_x, V_y, V_z); the map is unitary.  Basis vectors:
///   e_{+1} = -(x + i y)/sqrt(2),  e_0 = z,  e_{-1} = (x - i y)/sqrt(2).
Eigen::Vector3cd spherical_to_cartesian(const Eigen::Vector3cd& spherical);

/// Inverse of spherical_to_cartesian (the adjoint map).
Eigen::Vector3cd cartesian_to_spherical(const Eigen::Vector3cd& cartesian);

/// Cartesian absorption vector <F=0,M=0| d |F0=1,m> in units of d0,
/// i.e. sum_q dipole_component(m,q) e_q^*.  The emission vector
/// <m| d |F=0,0> is its complex conjugate.
Eigen::Vector3cd absorption_vector(int m_ground, const LevelScheme& scheme = {});

/// Unit polarization vector of a photon carrying angular momentum q along z.
Eigen::Vector3cd photon_polarization(int q);

} // namespace eitsim
