#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "eitsim/slab.hpp"

namespace eitsim {

/// Complex field envelope sampled on a uniform time grid (units 1/gamma).
/// Samples are taken in the frame rotating at the transition frequency,
/// so a pulse carried at detuning Delta0 oscillates as exp(-i*Delta0*t)
/// and its spectrum is centered at Delta0.
struct PulseTrace {
    double t_start = 0.0;
    double dt = 1.0;
    std::vector<complex> field;
    double carrier_detuning = 0.0;

    double time(std::size_t i) const { return t_start + dt * static_cast<double>(i); }
    /// Integrated |E|^2 dt.
    double energy() const;
};

/// Gaussian pulse exp(-(t-t_center)^2/(2 tau^2)) * exp(-i*Delta0*(t-t_center))
/// sampled on `samples` points (power of two) spanning [t_start, t_start + span).
/// tau relates to the intensity FWHM by FWHM = 2*sqrt(ln 2)*tau.
PulseTrace gaussian_pulse(double t_start, double span, int samples, double t_center,
                          double tau, double carrier_detuning);

/// Scalar shape metrics between an input and an output trace.
struct PulseMetrics {
    double delay = 0.0;       ///< shift of the |E|^2 centroid
    double peak_delay = 0.0;  ///< shift of the |E|^2 maximum (parabolic refinement)
    double efficiency = 1.0;  ///< energy(out)/energy(in)
    double broadening = 1.0;  ///< RMS width ratio out/in
    double input_duration = 0.0; ///< intensity FWHM of the input
};

using TransferFunction = std::function<complex(double)>;

/// Applies a frequency-domain transfer function to a pulse:
/// out(t) = IFFT[ T(Delta) * FFT[in] ].  T is evaluated exactly at the
/// detuning of each spectral bin.  Bins outside [support_min, support_max]
/// are dropped, and if they carry more than 0.1% of the pulse energy the
/// call fails and suggests a wider grid.
PulseTrace propagate_pulse(const PulseTrace& input, const TransferFunction& transfer,
                           double support_min, double support_max);

/// Convenience overload sampling T by linear interpolation of a computed
/// transmission series (adequate when the series resolves the phase of T;
/// prefer the function overload when the medium response can be evaluated
/// directly).
PulseTrace propagate_pulse(const PulseTrace& input,
                           const std::vector<TransmissionPoint>& transmission);

/// Centroid delay, peak delay, energy efficiency and RMS broadening.
PulseMetrics pulse_metrics(const PulseTrace& input, const PulseTrace& output);

/// Group delay d(arg T)/d(Delta) at the given detuning, by central
/// difference on the unwrapped phase of the transmission series.
double group_delay(const std::vector<TransmissionPoint>& transmission, double detuning);

} // namespace eitsim
