#pragma once

#include <numbers>

// Dimensionless unit system used throughout the library.
//
//   frequency unit : gamma, the natural decay rate of the excited state
//   length unit    : lambdabar = 1/k0, the reduced resonant wavelength
//   hbar = 1
//
// All spectra are functions of the probe detuning Delta = (omega - omega0)
// measured in gamma.  Slowly varying prefactors (omega^2, omega^3, omega/c)
// are evaluated at the bare transition frequency omega0, so the resonant
// wave number k0 = 1 appears wherever a field propagates; corrections are
// O(gamma/omega0) and far below every tolerance used here.
namespace eitsim::units {

inline constexpr double pi = std::numbers::pi;

/// Natural decay rate of the excited state (the frequency unit).
inline constexpr double gamma = 1.0;

/// Resonant wave number k0 = omega0/c = 1/lambdabar.
inline constexpr double wave_number = 1.0;

/// Squared transition dipole element of one decay channel, d0^2 = gamma/(4 k0^3).
///
/// The excited state F=0 decays into three ground sublevels with equal
/// strength, each channel carrying rate 4 d0^2 k0^3 / 3 = gamma/3.  The
/// value is fixed by the vacuum limit of the radiative self-energy: the
/// rate of emission into either polariton branch of a transparent medium
/// must reduce to gamma, which forces 4 d0^2 k0^3 = gamma (see
/// docs/model.md for the derivation).
inline constexpr double dipole_sq = 0.25;

/// Lorentz-Lorenz local-field coefficient, 4*pi/3.
inline constexpr double lorentz_lorenz = 4.0 * pi / 3.0;

} // namespace eitsim::units
