#include "eitsim/csv.hpp"

#include <cstdio>
#include <fstream>

#include "eitsim/errors.hpp"

namespace eitsim {

std::string format_double(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

std::ofstream open_csv(const std::filesystem::path& file)
{
    std::ofstream out(file);
    if (!out)
        throw config_error("cannot open output file " + file.string());
    return out;
}

} // namespace

void write_susceptibility_csv(const std::vector<SusceptibilityPoint>& points,
                              const std::filesystem::path& file)
{
    auto out = open_csv(file);
    out << "detuning,re_chi,im_chi,re_gamma_e,im_gamma_e,iterations,residual\n";
    for (const auto& p : points)
        out << format_double(p.probe_detuning) << ',' << format_double(p.chi.real()) << ','
            << format_double(p.chi.imag()) << ',' << format_double(p.gamma_e.real()) << ','
            << format_double(p.gamma_e.imag()) << ',' << p.iterations << ','
            << format_double(p.residual) << '\n';
}

void write_transmission_csv(const std::vector<TransmissionPoint>& points,
                            const std::filesystem::path& file)
{
    auto out = open_csv(file);
    out << "detuning,re_T,im_T,abs_T2\n";
    for (const auto& p : points)
        out << format_double(p.probe_detuning) << ',' << format_double(p.amplitude.real()) << ','
            << format_double(p.amplitude.imag()) << ','
            << format_double(std::norm(p.amplitude)) << '\n';
}

void write_pulse_csv(const PulseTrace& trace, const std::filesystem::path& file)
{
    auto out = open_csv(file);
    out << "time,re_field,im_field,abs2\n";
    for (std::size_t i = 0; i < trace.field.size(); ++i)
        out << format_double(trace.time(i)) << ',' << format_double(trace.field[i].real()) << ','
            << format_double(trace.field[i].imag()) << ','
            << format_double(std::norm(trace.field[i])) << '\n';
}

void write_cross_section_csv(const std::vector<double>& detuning, const std::vector<double>& q0,
                             const std::filesystem::path& file)
{
    if (detuning.size() != q0.size())
        throw std::invalid_argument("write_cross_section_csv: column length mismatch");
    auto out = open_csv(file);
    out << "detuning,q0_lambdabar2\n";
    for (std::size_t i = 0; i < q0.size(); ++i)
        out << format_double(detuning[i]) << ',' << format_double(q0[i]) << '\n';
}

void write_table_csv(const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows,
                     const std::filesystem::path& file)
{
    auto out = open_csv(file);
    for (std::size_t c = 0; c < columns.size(); ++c)
        out << columns[c] << (c + 1 < columns.size() ? ',' : '\n');
    for (const auto& row : rows) {
        if (row.size() != columns.size())
            throw std::invalid_argument("write_table_csv: row length mismatch");
        for (std::size_t c = 0; c < row.size(); ++c)
            out << format_double(row[c]) << (c + 1 < row.size() ? ',' : '\n');
    }
}

} // namespace eitsim
