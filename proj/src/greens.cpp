#include "eitsim/greens.hpp"

#include <complex>
#include <stdexcept>

namespace eitsim {

Eigen::Matrix3cd greens_dyadic(const Eigen::Vector3d& separation, double k)
{
    const double r = separation.norm();
    if (!(r > 0.0))
        throw std::invalid_argument("greens_dyadic: zero separation");

    using complex = std::complex<double>;
    const Eigen::Vector3d unit = separation / r;
    const Eigen::Matrix3d rr = unit * unit.transpose();
    const Eigen::Matrix3d transverse = Eigen::Matrix3d::Identity() - rr;
    const Eigen::Matrix3d near_field = 3.0 * rr - Eigen::Matrix3d::Identity();

    const complex phase = std::exp(complex(0.0, k * r));
    const complex far = k * k / r;
    const complex quasi_static = complex(1.0 / (r * r * r), -k / (r * r));

    return phase * (far * transverse.cast<complex>() + quasi_static * near_field.cast<complex>());
}

} // namespace eitsim
