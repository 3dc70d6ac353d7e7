#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "eitsim/pulse.hpp"
#include "eitsim/slab.hpp"
#include "eitsim/susceptibility.hpp"

namespace eitsim {

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double value);

// Fixed-header UTF-8 CSV writers.  All columns are %.17g doubles except
// the integer iteration counts.
//   susceptibility: detuning,re_chi,im_chi,re_gamma_e,im_gamma_e,iterations,residual
//   transmission:   detuning,re_T,im_T,abs_T2
//   pulse:          time,re_field,im_field,abs2
//   cross section:  detuning,q0_lambdabar2
void write_susceptibility_csv(const std::vector<SusceptibilityPoint>& points,
                              const std::filesystem::path& file);
void write_transmission_csv(const std::vector<TransmissionPoint>& points,
                            const std::filesystem::path& file);
void write_pulse_csv(const PulseTrace& trace, const std::filesystem::path& file);
void write_cross_section_csv(const std::vector<double>& detuning, const std::vector<double>& q0,
                             const std::filesystem::path& file);
/// Generic numeric table, one column name per column.
void write_table_csv(const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows,
                     const std::filesystem::path& file);

} // namespace eitsim
