#include "eitsim/susceptibility.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "eitsim/errors.hpp"
#include "eitsim/units.hpp"

namespace eitsim {

using namespace units;

complex gamma_e(complex chi)
{
    if (chi == 0.0)
        return gamma;
    const complex u = 2.0 * pi * chi;
    // atan(sqrt(u))/sqrt(u) has a removable singularity at u = 0.
    complex t;
    if (std::abs(u) < 1e-6) {
        t = 1.0 + u * (-1.0 / 3.0 + u * (1.0 / 5.0 - u / 7.0));
    } else {
        const complex r = std::sqrt(u);
        t = std::atan(r) / r;
    }
    return gamma * std::sqrt(1.0 + 2.0 * u) * t;
}

namespace {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
// computed by Newton iteration on the Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights)
{
    nodes.resize(static_cast<std::size_t>(n));
    weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        nodes[static_cast<std::size_t>(i)] = x;
        weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

// Extraordinary pole of the transverse propagator at direction cosine mu,
// located by Newton iteration on den(k) = a k^2 - b seeded from the
// vacuum pole k0.
complex extraordinary_pole(complex a, complex b, double mu)
{
    complex k = wave_number;
    for (int it = 0; it < 80; ++it) {
        const complex den = a * k * k - b;
        if (std::abs(den) < 1e-14 * std::max(1.0, std::abs(b)))
            return k;
        const complex dden = 2.0 * a * k;
        k -= den / dden;
    }
    std::ostringstream msg;
    msg << "extraordinary-pole search did not converge at cos(theta) = " << mu;
    throw solver_error(msg.str());
}

// Angular integrand of the extraordinary decay rate: iota(mu) such that
// gamma_e = -(4 i / pi) * d0^2 * k0^2 * Int_{-1}^{1} iota(mu) dmu, where
// iota is the half-line k-integral of the pole term, i*pi*b/den'(k_e).
complex pole_term(complex chi, double mu)
{
    const complex u = 2.0 * pi * chi;
    const complex a = 1.0 + u * (1.0 - mu * mu);
    const complex b = wave_number * wave_number * (1.0 + 2.0 * u);
    const complex ke = extraordinary_pole(a, b, mu);
    return complex(0.0, pi) * b / (2.0 * a * ke);
}

} // namespace

complex gamma_e_oracle(complex chi, double tolerance)
{
    if (chi == 0.0)
        return gamma;

    const complex prefactor = complex(0.0, -4.0 / pi) * dipole_sq * wave_number * wave_number;

    std::vector<double> nodes, weights;
    complex previous{0.0, 0.0};
    bool have_previous = false;
    for (int order = 16; order <= 1024; order *= 2) {
        gauss_legendre(order, nodes, weights);
        complex integral{0.0, 0.0};
        for (int i = 0; i < order; ++i)
            integral += weights[static_cast<std::size_t>(i)]
                * pole_term(chi, nodes[static_cast<std::size_t>(i)]);
        const complex value = prefactor * integral;
        if (have_previous && std::abs(value - previous) < 0.5 * tolerance)
            return value;
        previous = value;
        have_previous = true;
    }

    // Report the angle where the integrand varies fastest as a diagnostic.
    double worst_mu = 0.0;
    double worst_change = -1.0;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const double change = std::abs(pole_term(chi, nodes[i]) - pole_term(chi, nodes[i - 1]));
        if (change > worst_change) {
            worst_change = change;
            worst_mu = nodes[i];
        }
    }
    std::ostringstream msg;
    msg << "gamma_e quadrature did not reach " << tolerance
        << "; integrand varies fastest near cos(theta) = " << worst_mu;
    throw solver_error(msg.str());
}

namespace {

struct FixedPointMap {
    double delta;
    double dressing;   // s(Delta)
    double drive;      // rho * d0^2 k0^3... = density/4 in natural units
    double local_field; // rho * pi / 3, Lorentz-Lorenz shift

    complex operator()(complex chi) const
    {
        const complex denom = complex(-delta + dressing - local_field, 0.0)
            - complex(0.0, 0.25) * (gamma + gamma_e(chi));
        return drive / denom;
    }
};

bool converged(complex chi, complex f_chi, double tol)
{
    return std::abs(chi - f_chi) <= tol * std::max(1.0, std::abs(chi));
}

} // namespace

complex dilute_chi(double probe_detuning, const ModelParams& p)
{
    const double s = (p.rabi_control > 0.0 && probe_detuning != p.control_detuning)
        ? p.rabi_control * p.rabi_control / (2.0 * (probe_detuning - p.control_detuning))
        : 0.0;
    if (p.rabi_control > 0.0 && probe_detuning == p.control_detuning)
        return 0.0;
    const double drive = p.density * dipole_sq; // rho/4
    return drive / complex(-probe_detuning + s - p.density * pi / 3.0, -0.5);
}

SusceptibilityPoint solve_chi(double probe_detuning, const ModelParams& params,
                              std::optional<complex> warm_seed, const SolveOptions& options)
{
    SusceptibilityPoint point;
    point.probe_detuning = probe_detuning;

    // Exact two-photon resonance: the control dressing diverges and the
    // dipole response vanishes identically.
    if (params.rabi_control > 0.0 && probe_detuning == params.control_detuning) {
        point.chi = 0.0;
        point.gamma_e = gamma;
        return point;
    }

    FixedPointMap map{
        probe_detuning,
        params.rabi_control > 0.0
            ? params.rabi_control * params.rabi_control
                / (2.0 * (probe_detuning - params.control_detuning))
            : 0.0,
        params.density * dipole_sq,
        params.density * pi / 3.0,
    };

    complex chi = warm_seed.value_or(dilute_chi(probe_detuning, params));
    complex f = map(chi);
    int iter = 0;

    for (; iter < options.damped_iterations && !converged(chi, f, options.tolerance); ++iter) {
        chi = (1.0 - options.relaxation) * chi + options.relaxation * f;
        f = map(chi);
    }

    // Newton steps on g(chi) = chi - F(chi) if the damped iteration stalled.
    while (iter < options.max_iterations && !converged(chi, f, options.tolerance)) {
        const complex g = chi - f;
        const double h = 1e-7 * std::max(std::abs(chi), 1e-3);
        const complex gp = ((chi + h - map(chi + h)) - (chi - h - map(chi - h))) / (2.0 * h);
        complex step = (std::abs(gp) > 0.0) ? g / gp : g;
        chi -= step;
        f = map(chi);
        ++iter;
    }

    if (!converged(chi, f, options.tolerance)) {
        std::ostringstream msg;
        msg << "susceptibility iteration did not converge at Delta = " << probe_detuning
            << " (last chi = " << chi << ", residual = " << std::abs(chi - f) << ")";
        throw solver_error(msg.str());
    }
    if (chi.imag() < -1e-10) {
        std::ostringstream msg;
        msg << "susceptibility left the passive branch at Delta = " << probe_detuning
            << " (Im chi = " << chi.imag() << ")";
        throw solver_error(msg.str());
    }

    point.chi = chi;
    point.gamma_e = gamma_e(chi);
    point.iterations = iter;
    point.residual = std::abs(chi - f);
    return point;
}

namespace {

void check_branch_continuity(const std::vector<SusceptibilityPoint>& pts)
{
    // A branch flip of the complex square root shows up as a jump in
    // gamma_e an order of magnitude above the local grid-to-grid change.
    for (std::size_t i = 2; i < pts.size(); ++i) {
        const double jump = std::abs(pts[i].gamma_e - pts[i - 1].gamma_e);
        const double local = std::abs(pts[i - 1].gamma_e - pts[i - 2].gamma_e);
        const double floor = 1e-6;
        if (jump > 10.0 * std::max(local, floor) && jump > 0.05) {
            std::ostringstream msg;
            msg << "gamma_e branch discontinuity at grid index " << i
                << " (Delta = " << pts[i].probe_detuning << ", jump = " << jump
                << ", local variation = " << local << ")";
            throw solver_error(msg.str());
        }
    }
}

} // namespace

std::vector<SusceptibilityPoint> chi_spectrum(const FrequencyGrid& grid,
                                              const ModelParams& params, int workers,
                                              const SolveOptions& options, int chunk)
{
    grid.validate();
    if (chunk < 1)
        throw std::invalid_argument("chi_spectrum: chunk must be >= 1");
    const auto deltas = grid.values();
    for (std::size_t i = 1; i < deltas.size(); ++i)
        if (!(deltas[i] > deltas[i - 1]))
            throw config_error("chi_spectrum: grid must be strictly increasing");

    std::vector<SusceptibilityPoint> out(deltas.size());
    const int n_chunks = (grid.points + chunk - 1) / chunk;

    // Chunk boundaries depend only on the grid, so the sweep is bit-exact
    // for any worker count; each chunk cold-starts and then continues.
    auto run_chunk = [&](int c) {
        const int begin = c * chunk;
        const int end = std::min(grid.points, begin + chunk);
        std::optional<complex> seed;
        for (int i = begin; i < end; ++i) {
            try {
                out[static_cast<std::size_t>(i)] =
                    solve_chi(deltas[static_cast<std::size_t>(i)], params, seed, options);
            } catch (const solver_error& err) {
                throw solver_error("chi_spectrum: grid index " + std::to_string(i) + ": "
                                   + err.what());
            }
            seed = out[static_cast<std::size_t>(i)].chi;
        }
    };

    if (workers <= 1 || n_chunks == 1) {
        for (int c = 0; c < n_chunks; ++c)
            run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        std::atomic<int> next{0};
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (int c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
                        run_chunk(c);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& t : pool)
            t.join();
        for (const auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    check_branch_continuity(out);
    return out;
}

Eigen::Matrix3cd permittivity(complex chi)
{
    Eigen::Matrix3cd eps = Eigen::Matrix3cd::Identity();
    eps(1, 1) = 1.0 + 4.0 * pi * chi;
    return eps;
}

complex dispersion_residual(const Eigen::Vector3d& k_vector, double k_probe, complex chi)
{
    return dispersion_residual(complex(k_vector.squaredNorm(), 0.0),
                               complex(k_vector.z() * k_vector.z(), 0.0), k_probe, chi);
}

complex dispersion_residual(complex k_squared, complex kz_squared, double k_probe, complex chi)
{
    const double kp2 = k_probe * k_probe;
    const complex ordinary = k_squared - kp2;
    const complex extraordinary =
        k_squared + 2.0 * pi * chi * (k_squared - kz_squared) - kp2 * (1.0 + 4.0 * pi * chi);
    return ordinary * extraordinary;
}

complex extraordinary_wavenumber(complex chi, double mu)
{
    const complex u = 2.0 * pi * chi;
    const complex a = 1.0 + u * (1.0 - mu * mu);
    const complex b = wave_number * wave_number * (1.0 + 2.0 * u);
    return extraordinary_pole(a, b, mu);
}

} // namespace eitsim
