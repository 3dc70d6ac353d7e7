#include "eitsim/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

#include "eitsim/errors.hpp"
#include "eitsim/units.hpp"

namespace eitsim {

double PulseTrace::energy() const
{
    double e = 0.0;
    for (const auto& f : field)
        e += std::norm(f);
    return e * dt;
}

PulseTrace gaussian_pulse(double t_start, double span, int samples, double t_center,
                          double tau, double carrier_detuning)
{
    if (samples < 2 || (samples & (samples - 1)) != 0)
        throw std::invalid_argument("gaussian_pulse: samples must be a power of two");
    if (!(span > 0.0) || !(tau > 0.0))
        throw std::invalid_argument("gaussian_pulse: span and tau must be positive");

    PulseTrace trace;
    trace.t_start = t_start;
    trace.dt = span / samples;
    trace.carrier_detuning = carrier_detuning;
    trace.field.resize(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double t = trace.time(static_cast<std::size_t>(i)) - t_center;
        const double envelope = std::exp(-t * t / (2.0 * tau * tau));
        trace.field[static_cast<std::size_t>(i)] =
            envelope * std::exp(complex(0.0, -carrier_detuning * t));
    }
    return trace;
}

namespace {

// Signed FFT-bin detuning for bin k of an n-point transform.
double bin_detuning(std::size_t k, std::size_t n, double dt)
{
    const auto half = n / 2;
    const double signed_k = (k <= half) ? static_cast<double>(k)
                                        : static_cast<double>(k) - static_cast<double>(n);
    return 2.0 * units::pi * signed_k / (static_cast<double>(n) * dt);
}

complex interpolate_amplitude(const std::vector<TransmissionPoint>& tr, double detuning)
{
    const auto it = std::lower_bound(tr.begin(), tr.end(), detuning,
                                     [](const TransmissionPoint& p, double d) {
                                         return p.probe_detuning < d;
                                     });
    if (it == tr.begin())
        return it->amplitude;
    if (it == tr.end())
        return (it - 1)->amplitude;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double w = (detuning - lo.probe_detuning) / (hi.probe_detuning - lo.probe_detuning);
    return (1.0 - w) * lo.amplitude + w * hi.amplitude;
}

} // namespace

PulseTrace propagate_pulse(const PulseTrace& input, const TransferFunction& transfer,
                           double support_min, double support_max)
{
    if (input.field.size() < 2)
        throw std::invalid_argument("propagate_pulse: input has fewer than 2 samples");
    if (!(input.dt > 0.0))
        throw std::invalid_argument("propagate_pulse: non-positive time step");

    const std::size_t n = input.field.size();

    Eigen::FFT<double> fft;
    std::vector<complex> spectrum;
    fft.inv(spectrum, input.field); // analysis: bin k holds the component at +bin_detuning(k)

    double total = 0.0;
    double outside = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double d = bin_detuning(k, n, input.dt);
        const double w = std::norm(spectrum[k]);
        total += w;
        if (d < support_min || d > support_max) {
            outside += w;
            spectrum[k] = 0.0;
        } else if (w > 0.0) {
            spectrum[k] *= transfer(d);
        }
    }
    if (total <= 0.0)
        throw std::invalid_argument("propagate_pulse: zero-energy input");
    if (outside > 1e-3 * total) {
        std::ostringstream msg;
        msg << "propagate_pulse: " << 100.0 * outside / total
            << "% of the pulse energy falls outside the transfer support [" << support_min
            << ", " << support_max << "]; use a wider frequency grid";
        throw solver_error(msg.str());
    }

    PulseTrace output = input;
    fft.fwd(output.field, spectrum);
    return output;
}

PulseTrace propagate_pulse(const PulseTrace& input,
                           const std::vector<TransmissionPoint>& transmission)
{
    if (transmission.size() < 2)
        throw std::invalid_argument("propagate_pulse: transmission series has fewer than 2 points");
    return propagate_pulse(
        input, [&](double d) { return interpolate_amplitude(transmission, d); },
        transmission.front().probe_detuning, transmission.back().probe_detuning);
}

namespace {

struct Moments {
    double energy;
    double centroid;
    double rms;
};

Moments intensity_moments(const PulseTrace& p)
{
    double e = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < p.field.size(); ++i) {
        const double w = std::norm(p.field[i]);
        const double t = p.time(i);
        e += w;
        m1 += w * t;
        m2 += w * t * t;
    }
    if (e <= 0.0)
        throw std::invalid_argument("pulse_metrics: zero-energy trace");
    const double mean = m1 / e;
    const double var = std::max(0.0, m2 / e - mean * mean);
    return {e * p.dt, mean, std::sqrt(var)};
}

double peak_time(const PulseTrace& p)
{
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < p.field.size(); ++i) {
        const double w = std::norm(p.field[i]);
        if (w > best) {
            best = w;
            imax = i;
        }
    }
    if (imax == 0 || imax + 1 >= p.field.size())
        return p.time(imax);
    // parabolic refinement through the three samples around the maximum
    const double y0 = std::norm(p.field[imax - 1]);
    const double y1 = std::norm(p.field[imax]);
    const double y2 = std::norm(p.field[imax + 1]);
    const double denom = y0 - 2.0 * y1 + y2;
    const double shift = (denom != 0.0) ? 0.5 * (y0 - y2) / denom : 0.0;
    return p.time(imax) + shift * p.dt;
}

double intensity_fwhm(const PulseTrace& p)
{
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < p.field.size(); ++i)
        if (std::norm(p.field[i]) > best) {
            best = std::norm(p.field[i]);
            imax = i;
        }
    const double half = 0.5 * best;
    auto crossing = [&](bool left) -> double {
        std::size_t i = imax;
        while (true) {
            const std::size_t next = left ? i - 1 : i + 1;
            if ((left && i == 0) || (!left && next >= p.field.size()))
                return p.time(i);
            const double a = std::norm(p.field[i]);
            const double b = std::norm(p.field[next]);
            if (b <= half) {
                const double w = (a - half) / (a - b);
                return p.time(i) + (left ? -w : w) * p.dt;
            }
            i = next;
        }
    };
    return crossing(false) - crossing(true);
}

} // namespace

PulseMetrics pulse_metrics(const PulseTrace& input, const PulseTrace& output)
{
    if (input.field.size() != output.field.size() || input.dt != output.dt
        || input.t_start != output.t_start)
        throw std::invalid_argument("pulse_metrics: traces are on different grids");

    const Moments in = intensity_moments(input);
    const Moments out = intensity_moments(output);

    PulseMetrics m;
    m.delay = out.centroid - in.centroid;
    m.peak_delay = peak_time(output) - peak_time(input);
    m.efficiency = out.energy / in.energy;
    m.broadening = (in.rms > 0.0) ? out.rms / in.rms : 1.0;
    m.input_duration = intensity_fwhm(input);
    return m;
}

double group_delay(const std::vector<TransmissionPoint>& transmission, double detuning)
{
    if (transmission.size() < 3)
        throw std::invalid_argument("group_delay: need at least 3 spectrum points");
    const auto it = std::lower_bound(transmission.begin(), transmission.end(), detuning,
                                     [](const TransmissionPoint& p, double d) {
                                         return p.probe_detuning < d;
                                     });
    std::size_t i = static_cast<std::size_t>(std::distance(transmission.begin(), it));
    i = std::clamp<std::size_t>(i, 1, transmission.size() - 2);
    const auto& lo = transmission[i - 1];
    const auto& hi = transmission[i + 1];
    // phase difference via the product, immune to 2*pi wrapping for fine grids
    const double dphi = std::arg(hi.amplitude * std::conj(lo.amplitude));
    return dphi / (hi.probe_detuning - lo.probe_detuning);
}

} // namespace eitsim
