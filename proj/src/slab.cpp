#include "eitsim/slab.hpp"

#include <stdexcept>

#include "eitsim/units.hpp"

namespace eitsim {

using namespace units;

TransmissionPoint transmission(double probe_detuning, complex chi, double slab_length)
{
    if (slab_length < 0.0)
        throw std::invalid_argument("transmission: slab_length must be >= 0");

    const complex eps = 1.0 + 4.0 * pi * chi;
    const complex root = std::sqrt(eps);
    const complex psi = slab_length * root * wave_number;

    TransmissionPoint point;
    point.probe_detuning = probe_detuning;
    point.phase_thickness = psi;

    if (psi == 0.0)
        return point; // zero phase thickness transmits identically

    const complex phase = std::exp(complex(0.0, 1.0) * psi);
    const complex r = (root - 1.0) / (root + 1.0);
    point.amplitude = 4.0 * root / ((root + 1.0) * (root + 1.0))
        * phase / (1.0 - r * r * phase * phase);
    return point;
}

std::vector<TransmissionPoint> transmission_spectrum(const std::vector<SusceptibilityPoint>& chi,
                                                     double slab_length)
{
    std::vector<TransmissionPoint> out;
    out.reserve(chi.size());
    for (const auto& p : chi)
        out.push_back(transmission(p.probe_detuning, p.chi, slab_length));
    return out;
}

} // namespace eitsim
