#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "eitsim/grid.hpp"
#include "eitsim/params.hpp"

namespace eitsim {

using complex = std::complex<double>;

/// One solved point of the macroscopic susceptibility.
struct SusceptibilityPoint {
    double probe_detuning = 0.0; ///< Delta = (omega - omega0)/gamma
    complex chi{0.0, 0.0};       ///< dimensionless susceptibility
    complex gamma_e{1.0, 0.0};   ///< extraordinary-mode rate, units of gamma
    int iterations = 0;
    double residual = 0.0;       ///< |chi - F(chi)| at the reported point
};

struct SolveOptions {
    double tolerance = 1e-10;  ///< relative fixed-point tolerance
    int damped_iterations = 200;
    int max_iterations = 10000;
    double relaxation = 0.5;
};

/// Radiative rate into the extraordinary mode of the anisotropic medium,
/// in units of gamma:
///
///   gamma_e(chi) = gamma * sqrt((1+4*pi*chi)/(2*pi*chi))
///                        * arcsin(sqrt(2*pi*chi/(1+2*pi*chi)))
///
/// evaluated on the branch continuously connected to the transparent
/// limit gamma_e(0) = gamma.  With u = 2*pi*chi this equals
/// sqrt(1+2u) * atan(sqrt(u))/sqrt(u), which is even in sqrt(u); the
/// principal branches are continuous on the physical half-plane
/// Im chi >= 0.  The omega^3 prefactor is frozen at resonance.
complex gamma_e(complex chi);

/// Independent quadrature evaluation of gamma_e: for each propagation
/// angle the extraordinary pole k_e(theta) of the transverse field
/// propagator is located by a complex Newton iteration, its residue is
/// taken, and the result is integrated over the solid angle by adaptive
/// Gauss-Legendre quadrature.
complex gamma_e_oracle(complex chi, double tolerance = 1e-9);

/// Self-consistent susceptibility at one probe detuning.  Solves the
/// fixed point of
///
///   chi = F(chi) = (rho/4) / (-Delta + s(Delta)
///                   - i*(1 + gamma_e(chi))/4 - rho*pi/3)
///
/// where s(Delta) = rabi^2 / (2*(Delta - control_detuning)) is the
/// control-field dressing and the rho*pi/3 term is the Lorentz-Lorenz
/// local-field shift folded into the denominator (see docs/model.md).
/// A grid point exactly at the two-photon resonance returns the analytic
/// limit chi = 0.
SusceptibilityPoint solve_chi(double probe_detuning, const ModelParams& params,
                              std::optional<complex> warm_seed = std::nullopt,
                              const SolveOptions& options = {});

/// Sweep of solve_chi over a monotone grid with warm-started continuation.
/// The grid is processed in fixed contiguous chunks of `chunk` points;
/// each chunk cold-starts its first point and continues from there, so the
/// result does not depend on the worker count.  A branch-continuity
/// monitor rejects sweeps where gamma_e jumps by more than 10x the local
/// grid-to-grid variation.
std::vector<SusceptibilityPoint> chi_spectrum(const FrequencyGrid& grid,
                                              const ModelParams& params,
                                              int workers = 1,
                                              const SolveOptions& options = {},
                                              int chunk = 64);

/// Dielectric permittivity tensor; rows/columns ordered (sigma+, sigma-, pi).
/// Diagonal with 1 + 4*pi*chi in the sigma- slot and 1 elsewhere.
Eigen::Matrix3cd permittivity(complex chi);

/// Left-hand side of the dispersion relation of the anisotropic medium,
///
///   (k^2 - kp^2) * (k^2 + 2*pi*chi*(k^2 - kz^2) - kp^2*(1+4*pi*chi))
///
/// with kp = omega/c the probe wave number (kp = 1 at resonance in these
/// units).  Zero exactly on the ordinary branch |k| = kp and on the
/// extraordinary branch k_e(theta).
complex dispersion_residual(const Eigen::Vector3d& k_vector, double k_probe, complex chi);

/// Overload for complex wave vectors (absorbing media put the roots off
/// the real axis), specified through k^2 and kz^2.
complex dispersion_residual(complex k_squared, complex kz_squared, double k_probe, complex chi);

/// Extraordinary-branch wave number k_e at direction cosine mu = kz/|k|,
/// located by the same Newton iteration the quadrature oracle uses.
complex extraordinary_wavenumber(complex chi, double mu);

/// Analytic dilute-limit susceptibility (single-atom Lorentzian with the
/// Lorentz-Lorenz shift kept to first order in the density); reference
/// oracle for densities << 1.
complex dilute_chi(double probe_detuning, const ModelParams& params);

} // namespace eitsim
