#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "eitsim/errors.hpp"
#include "eitsim/pulse.hpp"
#include "eitsim/slab.hpp"
#include "eitsim/susceptibility.hpp"
#include "eitsim/units.hpp"

using namespace eitsim;
using units::pi;

TEST_CASE("vacuum slab transmits with unit modulus")
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> length(0.0, 30.0);
    std::uniform_real_distribution<double> detuning(-10.0, 10.0);
    for (int trial = 0; trial < 10; ++trial) {
        const auto t = transmission(detuning(rng), complex(0.0, 0.0), length(rng));
        CHECK(std::abs(std::abs(t.amplitude) - 1.0) < 1e-12);
    }
    // zero thickness is the identity
    CHECK(transmission(0.3, complex(0.2, 0.4), 0.0).amplitude == complex(1.0, 0.0));
    CHECK_THROWS_AS(transmission(0.0, complex(0.0, 0.0), -1.0), std::invalid_argument);
}

TEST_CASE("passive media never amplify the transmitted field")
{
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> re(-0.5, 0.5);
    std::uniform_real_distribution<double> im(0.0, 1.0);
    std::uniform_real_distribution<double> length(0.0, 20.0);
    for (int trial = 0; trial < 200; ++trial) {
        const complex chi(re(rng), im(rng));
        const auto t = transmission(0.0, chi, length(rng));
        CHECK(std::abs(t.amplitude) <= 1.0 + 1e-10);
    }
}

TEST_CASE("dilute slab follows the Beer-Lambert attenuation law")
{
    ModelParams p;
    p.density = 1e-6;
    p.atom_count = 100;
    const double length = 2e5; // optically thick despite the tiny density
    FrequencyGrid grid{-2.0, 2.0, 41};
    const auto chi = chi_spectrum(grid, p);
    const auto tr = transmission_spectrum(chi, length);
    for (int i = 0; i < grid.points; ++i) {
        const auto k = static_cast<std::size_t>(i);
        // n0 sigma(Delta) = 4 pi k0 Im chi
        const double optical_depth = 4.0 * pi * chi[k].chi.imag() * length;
        CHECK(std::norm(tr[k].amplitude)
              == doctest::Approx(std::exp(-optical_depth)).epsilon(0.01));
    }
}

TEST_CASE("identity transfer reproduces the input samples")
{
    const PulseTrace in = gaussian_pulse(0.0, 256.0, 1024, 64.0, 8.0, 0.0);
    std::vector<TransmissionPoint> flat(2);
    flat[0] = {-50.0, complex(1.0, 0.0), complex(0.0, 0.0)};
    flat[1] = {50.0, complex(1.0, 0.0), complex(0.0, 0.0)};
    const PulseTrace out = propagate_pulse(in, flat);
    for (std::size_t i = 0; i < in.field.size(); ++i)
        CHECK(std::abs(out.field[i] - in.field[i]) < 1e-12);
}

TEST_CASE("linear-phase transfer delays the pulse without reshaping it")
{
    const double t0 = 17.0;
    const PulseTrace in = gaussian_pulse(0.0, 512.0, 2048, 128.0, 10.0, 0.0);
    const PulseTrace out = propagate_pulse(
        in, [&](double d) { return std::exp(complex(0.0, d * t0)); }, -30.0, 30.0);

    const PulseMetrics m = pulse_metrics(in, out);
    CHECK(m.delay == doctest::Approx(t0).epsilon(1e-6));
    CHECK(m.peak_delay == doctest::Approx(t0).epsilon(1e-3));
    CHECK(m.efficiency == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(m.broadening == doctest::Approx(1.0).epsilon(1e-6));

    // sample-level shape preservation against the analytically shifted pulse
    const PulseTrace shifted = gaussian_pulse(0.0, 512.0, 2048, 128.0 + t0, 10.0, 0.0);
    for (std::size_t i = 0; i < out.field.size(); ++i)
        CHECK(std::abs(out.field[i] - shifted.field[i]) < 1e-10);
}

TEST_CASE("propagation is linear in the input field")
{
    const PulseTrace in = gaussian_pulse(0.0, 256.0, 1024, 64.0, 8.0, 0.3);
    const auto medium = [](double d) { return std::exp(complex(-0.02 * d * d, 0.4 * d)); };
    const complex scale(0.7, -1.3);
    PulseTrace scaled = in;
    for (auto& f : scaled.field)
        f *= scale;

    const PulseTrace out = propagate_pulse(in, medium, -10.0, 10.0);
    const PulseTrace out_scaled = propagate_pulse(scaled, medium, -10.0, 10.0);
    for (std::size_t i = 0; i < out.field.size(); ++i)
        CHECK(std::abs(out_scaled.field[i] - scale * out.field[i]) < 1e-12);
}

TEST_CASE("energy outside the transmission grid is rejected")
{
    // short pulse -> wide spectrum, narrow grid -> leakage error
    const PulseTrace in = gaussian_pulse(0.0, 64.0, 512, 16.0, 0.5, 0.0);
    std::vector<TransmissionPoint> narrow(3);
    narrow[0] = {-0.2, complex(1.0, 0.0), {}};
    narrow[1] = {0.0, complex(1.0, 0.0), {}};
    narrow[2] = {0.2, complex(1.0, 0.0), {}};
    CHECK_THROWS_AS(propagate_pulse(in, narrow), solver_error);
}

TEST_CASE("pulse metrics on identical traces are the identity")
{
    const PulseTrace in = gaussian_pulse(0.0, 128.0, 512, 32.0, 4.0, 0.0);
    const PulseMetrics m = pulse_metrics(in, in);
    CHECK(m.delay == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(m.efficiency == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.broadening == doctest::Approx(1.0).epsilon(1e-12));
    // Gaussian intensity FWHM = 2 sqrt(ln 2) tau
    CHECK(m.input_duration == doctest::Approx(2.0 * std::sqrt(std::log(2.0)) * 4.0).epsilon(1e-3));

    PulseTrace zero = in;
    for (auto& f : zero.field)
        f = 0.0;
    CHECK_THROWS_AS(pulse_metrics(zero, in), std::invalid_argument);
}

TEST_CASE("group delay of a linear-phase medium matches the imposed slope")
{
    std::vector<TransmissionPoint> medium(201);
    for (int i = 0; i < 201; ++i) {
        const double d = -1.0 + 0.01 * i;
        medium[static_cast<std::size_t>(i)] = {d, std::exp(complex(0.0, 12.5 * d)), {}};
    }
    CHECK(group_delay(medium, 0.0) == doctest::Approx(12.5).epsilon(1e-9));
}
