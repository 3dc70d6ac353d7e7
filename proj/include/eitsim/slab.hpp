#pragma once

#include <complex>
#include <vector>

#include "eitsim/susceptibility.hpp"

namespace eitsim {

/// Monochromatic transmission through a slab of length L.
struct TransmissionPoint {
    double probe_detuning = 0.0;
    complex amplitude{1.0, 0.0};       ///< T_omega
    complex phase_thickness{0.0, 0.0}; ///< psi = L*sqrt(eps)*k0
};

/// Field transmission amplitude of a homogeneous dielectric slab,
///
///   T = 2*sqrt(eps) / (2*sqrt(eps)*cos(psi) - i*(1+eps)*sin(psi)),
///   psi = L*sqrt(eps)*k0,  eps = 1 + 4*pi*chi,
///
/// evaluated in the reflection-series form
///   T = (4*sqrt(eps)/(sqrt(eps)+1)^2) * e^{i psi} / (1 - r^2 e^{2 i psi}),
///   r = (sqrt(eps)-1)/(sqrt(eps)+1),
/// which is overflow-free for absorbing media (Im psi >= 0).  The
/// principal square root keeps sqrt(eps) continuously connected to +1.
TransmissionPoint transmission(double probe_detuning, complex chi, double slab_length);

/// Pointwise transmission over a solved susceptibility spectrum.
std::vector<TransmissionPoint> transmission_spectrum(const std::vector<SusceptibilityPoint>& chi,
                                                     double slab_length);

} // namespace eitsim
