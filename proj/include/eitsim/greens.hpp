#pragma once

#include <Eigen/Dense>

#include "eitsim/units.hpp"

namespace eitsim {

/// Free-space dyadic Green's function of an oscillating point dipole:
/// the field at separation R of a dipole p at the origin is E = G(R) p,
///
///   G(R) = e^{ikR} [ k^2/R (delta - RR) + (1/R^3 - ik/R^2)(3RR - delta) ]
///
/// with RR the outer product of the unit separation vector.  G is
/// symmetric and even in R; its imaginary part tends to (2/3) k^3 delta
/// as kR -> 0, which sets the collective decay rates (two co-located
/// parallel dipoles of a transition with width gamma acquire widths
/// 2*gamma and 0).
Eigen::Matrix3cd greens_dyadic(const Eigen::Vector3d& separation,
                               double k = units::wave_number);

} // namespace eitsim
