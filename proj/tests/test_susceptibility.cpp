#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eitsim/errors.hpp"
#include "eitsim/susceptibility.hpp"
#include "eitsim/units.hpp"

using namespace eitsim;
using units::pi;

namespace {

ModelParams dense_params(double rabi = 0.0)
{
    ModelParams p;
    p.density = 1.0;
    p.rabi_control = rabi;
    p.atom_count = 100;
    return p;
}

} // namespace

TEST_CASE("gamma_e reduces to gamma in the transparent limit")
{
    CHECK(gamma_e(complex(0.0, 0.0)) == complex(1.0, 0.0));
    const complex nearly = gamma_e(complex(1e-12, 1e-12));
    CHECK(std::abs(nearly - 1.0) < 1e-10);
}

TEST_CASE("gamma_e matches the angular-residue quadrature")
{
    // dilute, absorptive, dispersive and dense-regime samples
    const complex samples[] = {
        {0.0, 0.01},  {0.01, 0.0},   {-0.02, 0.005}, {0.05, 0.08},
        {-0.1, 0.25}, {0.3, 0.5},    {0.0, 1.0},     {0.2, 0.02},
        {-0.05, 0.6}, {0.001, 3e-4},
    };
    for (const complex chi : samples) {
        const complex closed = gamma_e(chi);
        const complex quad = gamma_e_oracle(chi);
        CAPTURE(chi.real());
        CAPTURE(chi.imag());
        CHECK(std::abs(closed - quad) < 1e-8);
    }
    CHECK(gamma_e_oracle(complex(0.0, 0.0)) == complex(1.0, 0.0));
}

TEST_CASE("dilute susceptibility is the half-width-gamma/2 Lorentzian")
{
    ModelParams p;
    p.density = 1e-6;
    const auto point = solve_chi(0.0, p);
    // on resonance Im(4 pi chi) = 2 pi rho
    CHECK(4.0 * pi * point.chi.imag()
          == doctest::Approx(2.0 * pi * p.density).epsilon(1e-3));
    CHECK(point.residual <= 1e-10 * std::max(1.0, std::abs(point.chi)));

    // half width at half maximum of Im chi equals gamma/2 within 1%
    FrequencyGrid grid{-3.0, 3.0, 1201};
    const auto spectrum = chi_spectrum(grid, p);
    double peak = 0.0;
    int ipeak = 0;
    for (int i = 0; i < grid.points; ++i)
        if (spectrum[static_cast<std::size_t>(i)].chi.imag() > peak) {
            peak = spectrum[static_cast<std::size_t>(i)].chi.imag();
            ipeak = i;
        }
    // walk right to the half-maximum crossing
    double hwhm = 0.0;
    for (int i = ipeak; i + 1 < grid.points; ++i) {
        const double a = spectrum[static_cast<std::size_t>(i)].chi.imag();
        const double b = spectrum[static_cast<std::size_t>(i + 1)].chi.imag();
        if (b <= 0.5 * peak) {
            const double w = (a - 0.5 * peak) / (a - b);
            hwhm = grid.value(i) + w * (grid.value(i + 1) - grid.value(i))
                - grid.value(ipeak);
            break;
        }
    }
    CHECK(hwhm == doctest::Approx(0.5).epsilon(0.01));

    // pointwise agreement with the analytic dilute form
    for (const auto& pt : spectrum) {
        const complex reference = dilute_chi(pt.probe_detuning, p);
        CHECK(std::abs(pt.chi - reference) < 0.01 * std::abs(reference));
    }
}

TEST_CASE("density-one resonance shifts to the red and is non-Lorentzian")
{
    const auto p = dense_params();
    FrequencyGrid grid{-6.0, 6.0, 601};
    const auto spectrum = chi_spectrum(grid, p);

    double peak = 0.0;
    double peak_delta = 0.0;
    for (const auto& pt : spectrum)
        if (pt.chi.imag() > peak) {
            peak = pt.chi.imag();
            peak_delta = pt.probe_detuning;
        }
    CHECK(peak_delta < -0.5);

    // asymmetry of the half-maximum wings rules out a Lorentzian profile
    double left = 0.0, right = 0.0;
    for (const auto& pt : spectrum) {
        if (pt.probe_detuning < peak_delta && pt.chi.imag() < 0.5 * peak)
            left = peak_delta - pt.probe_detuning;
        if (pt.probe_detuning > peak_delta && pt.chi.imag() >= 0.5 * peak)
            right = pt.probe_detuning - peak_delta;
    }
    CHECK(std::abs(left - right) > 0.05 * std::max(left, right));
}

TEST_CASE("control field opens an exact transparency point")
{
    const auto p = dense_params(1.0);
    const auto at_resonance = solve_chi(0.0, p);
    CHECK(at_resonance.chi == complex(0.0, 0.0));
    CHECK(at_resonance.iterations == 0);

    // |chi| -> 0 approaching the two-photon point on the solved branch
    const double offsets[] = {0.1, 0.03, 0.01};
    double previous = 1e9;
    for (const double d : offsets) {
        const auto pt = solve_chi(d, p);
        CHECK(std::abs(pt.chi) < previous);
        previous = std::abs(pt.chi);
    }
    CHECK(previous < 0.01);
}

TEST_CASE("EIT spectrum shows a transparency dip and negative dispersion")
{
    const auto p = dense_params(1.0);
    FrequencyGrid grid{-4.0, 4.0, 801};
    const auto spectrum = chi_spectrum(grid, p);

    double peak_im = 0.0;
    for (const auto& pt : spectrum)
        peak_im = std::max(peak_im, pt.chi.imag());
    const auto& dip = spectrum[400]; // Delta = 0 exactly
    CHECK(dip.probe_detuning == 0.0);
    CHECK(std::abs(dip.chi) < 0.1 * peak_im);

    // the window center itself carries the steep normal (slow-light) slope
    const double center_slope = spectrum[401].chi.real() - spectrum[399].chi.real();
    CHECK(center_slope > 0.0);

    // anomalous (negative-slope) dispersion appears across the window, at
    // the two absorption maxima flanking the dip
    int left_peak = 400, right_peak = 400;
    for (int i = 1; i < 400; ++i)
        if (spectrum[static_cast<std::size_t>(i)].chi.imag()
            > spectrum[static_cast<std::size_t>(left_peak)].chi.imag())
            left_peak = i;
    for (int i = 401; i + 1 < 801; ++i)
        if (spectrum[static_cast<std::size_t>(i)].chi.imag()
            > spectrum[static_cast<std::size_t>(right_peak)].chi.imag())
            right_peak = i;
    double min_slope = 1e9;
    for (int i = left_peak; i <= right_peak; ++i) {
        const double slope = spectrum[static_cast<std::size_t>(i + 1)].chi.real()
            - spectrum[static_cast<std::size_t>(i - 1)].chi.real();
        min_slope = std::min(min_slope, slope);
    }
    CHECK(min_slope < 0.0);
}

TEST_CASE("solved points satisfy the contract invariants")
{
    const auto p = dense_params(1.0);
    FrequencyGrid grid{-5.0, 5.0, 401};
    const auto spectrum = chi_spectrum(grid, p);
    for (const auto& pt : spectrum) {
        CHECK(pt.chi.imag() >= -1e-10);
        CHECK(pt.residual <= 1e-10 * std::max(1.0, std::abs(pt.chi)));
        // reported gamma_e is the closed form at the solved chi
        CHECK(std::abs(pt.gamma_e - gamma_e(pt.chi)) == 0.0);
    }
}

TEST_CASE("spectra are bit-identical across repeated runs and worker counts")
{
    const auto p = dense_params(1.0);
    FrequencyGrid grid{-5.0, 5.0, 257};
    const auto serial = chi_spectrum(grid, p, 1);
    const auto repeat = chi_spectrum(grid, p, 1);
    const auto threaded = chi_spectrum(grid, p, 4);
    for (int i = 0; i < grid.points; ++i) {
        const auto k = static_cast<std::size_t>(i);
        CHECK(serial[k].chi == repeat[k].chi);
        CHECK(serial[k].chi == threaded[k].chi);
    }
}

TEST_CASE("chunked continuation agrees with single-chunk continuation")
{
    const auto p = dense_params(1.0);
    FrequencyGrid grid{-5.0, 5.0, 257};
    const auto chunked = chi_spectrum(grid, p, 1, {}, 64);
    const auto single = chi_spectrum(grid, p, 1, {}, grid.points);
    for (int i = 0; i < grid.points; ++i) {
        const auto k = static_cast<std::size_t>(i);
        CHECK(std::abs(chunked[k].chi - single[k].chi)
              < 1e-8 * std::max(1.0, std::abs(single[k].chi)));
    }
}

TEST_CASE("permittivity tensor is diagonal with the sigma- entry dressed")
{
    const Eigen::Matrix3cd identity = permittivity(complex(0.0, 0.0));
    CHECK(identity.isApprox(Eigen::Matrix3cd::Identity()));

    const complex chi(0.0, 1.0);
    const Eigen::Matrix3cd eps = permittivity(chi);
    CHECK(eps(0, 0) == complex(1.0, 0.0));
    CHECK(eps(2, 2) == complex(1.0, 0.0));
    CHECK(eps(1, 1) == complex(1.0, 0.0) + 4.0 * pi * chi);
    CHECK(eps(0, 1) == complex(0.0, 0.0));
}

TEST_CASE("dispersion residual vanishes on both propagation branches")
{
    const complex chi(0.07, 0.21);
    // ordinary branch: |k| = k_probe in any direction, for any chi
    CHECK(std::abs(dispersion_residual(Eigen::Vector3d(0.0, 0.0, 1.0), 1.0, chi)) == 0.0);
    const Eigen::Vector3d oblique = Eigen::Vector3d(0.6, 0.0, 0.8);
    CHECK(std::abs(dispersion_residual(oblique, 1.0, chi)) < 1e-14);

    // vacuum: both branches coincide
    CHECK(std::abs(dispersion_residual(oblique, 1.0, complex(0.0, 0.0))) < 1e-14);

    // extraordinary roots from the oracle's pole finder satisfy the relation
    for (const double mu : {0.9, 0.5, 0.0}) {
        const complex ke = extraordinary_wavenumber(chi, mu);
        const complex k2 = ke * ke;
        const complex kz2 = k2 * mu * mu;
        CHECK(std::abs(dispersion_residual(k2, kz2, 1.0, chi)) < 1e-10);
    }
}

TEST_CASE("gamma_e of a solved dense spectrum matches the quadrature oracle")
{
    const auto p = dense_params();
    FrequencyGrid grid{-4.0, 2.0, 61};
    const auto spectrum = chi_spectrum(grid, p);
    for (int i = 0; i < grid.points; i += 6) {
        const auto& pt = spectrum[static_cast<std::size_t>(i)];
        CHECK(std::abs(pt.gamma_e - gamma_e_oracle(pt.chi)) < 1e-8);
    }
}
