#include "eitsim/level.hpp"

#include <stdexcept>

namespace eitsim {

namespace {

void check_sublevel(int m)
{
    if (m < -1 || m > 1)
        throw std::invalid_argument("ground sublevel must be one of -1, 0, +1");
}

// Columns are e_{-1}, e_0, e_{+1}.
Eigen::Matrix3cd spherical_basis_matrix()
{
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix3cd u;
    u << complex(s, 0), complex(0, 0), complex(-s, 0),
         complex(0, -s), complex(0, 0), complex(0, -s),
         complex(0, 0), complex(1, 0), complex(0, 0);
    return u;
}

} // namespace

complex dipole_component(int m_ground, int q, const LevelScheme& scheme)
{
    check_sublevel(m_ground);
    if (q < -1 || q > 1)
        throw std::invalid_argument("spherical index must be one of -1, 0, +1");
    if (q != -m_ground)
        return 0.0;
    return scheme.phase(m_ground);
}

Eigen::Vector3cd spherical_to_cartesian(const Eigen::Vector3cd& spherical)
{
    return spherical_basis_matrix() * spherical;
}

Eigen::Vector3cd cartesian_to_spherical(const Eigen::Vector3cd& cartesian)
{
    return spherical_basis_matrix().adjoint() * cartesian;
}

Eigen::Vector3cd absorption_vector(int m_ground, const LevelScheme& scheme)
{
    check_sublevel(m_ground);
    Eigen::Vector3cd s = Eigen::Vector3cd::Zero();
    s[static_cast<Eigen::Index>(-m_ground + 1)] = dipole_component(m_ground, -m_ground, scheme);
    // sum_q V_q e_q^* = conj(sum_q V_q^* e_q)
    return spherical_to_cartesian(s.conjugate()).conjugate();
}

Eigen::Vector3cd photon_polarization(int q)
{
    if (q < -1 || q > 1)
        throw std::invalid_argument("photon angular momentum must be one of -1, 0, +1");
    Eigen::Vector3cd s = Eigen::Vector3cd::Zero();
    s[static_cast<Eigen::Index>(q + 1)] = 1.0;
    return spherical_to_cartesian(s);
}

} // namespace eitsim
