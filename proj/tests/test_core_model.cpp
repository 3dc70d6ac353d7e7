#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "eitsim/errors.hpp"
#include "eitsim/grid.hpp"
#include "eitsim/level.hpp"
#include "eitsim/params.hpp"
#include "eitsim/units.hpp"

using namespace eitsim;

TEST_CASE("validate_params fills defaults and derives the box length")
{
    const auto p = validate_params(nlohmann::json{{"atom_count", 50}, {"density", 1.0}});
    CHECK(p.slab_length == doctest::Approx(std::cbrt(50.0)).epsilon(1e-14));
    CHECK(p.slab_length == doctest::Approx(3.6840314986).epsilon(1e-9));
    CHECK(p.rabi_control == 0.0);
    CHECK(p.neighbor_count == 1);
}

TEST_CASE("validate_params accepts the minimal single-atom config")
{
    const auto p = validate_params(
        nlohmann::json{{"atom_count", 1}, {"density", 1.0}, {"neighbor_count", 1}});
    CHECK(p.atom_count == 1);
    CHECK(p.slab_length == doctest::Approx(1.0));
}

TEST_CASE("validate_params rejects bad configs with distinct diagnostics")
{
    CHECK_THROWS_WITH_AS(
        validate_params(nlohmann::json{{"atom_count", 10}, {"neighbor_count", 11}}),
        "neighbor_count exceeds atom_count", config_error);
    CHECK_THROWS_WITH_AS(validate_params(nlohmann::json{{"density", -1.0}}),
                         "density must be positive", config_error);
    CHECK_THROWS_WITH_AS(validate_params(nlohmann::json{{"rabi_control", -0.5}}),
                         "rabi_control must be non-negative", config_error);
    CHECK_THROWS_AS(validate_params(nlohmann::json{{"densty", 1.0}}), config_error);
    CHECK_THROWS_AS(validate_params(nlohmann::json{{"seed", -3}}), config_error);
}

TEST_CASE("dipole components obey the q = -m selection rule")
{
    // sigma- probe channel
    CHECK(std::abs(dipole_component(+1, -1)) == doctest::Approx(1.0));
    // forbidden by Delta M
    CHECK(dipole_component(+1, 0) == complex(0.0, 0.0));
    CHECK(dipole_component(+1, +1) == complex(0.0, 0.0));
    // pi control channel
    CHECK(std::abs(dipole_component(0, 0)) == doctest::Approx(1.0));
    // sigma+ control channel
    CHECK(std::abs(dipole_component(-1, +1)) == doctest::Approx(1.0));

    CHECK_THROWS_AS(dipole_component(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(dipole_component(0, -2), std::invalid_argument);
}

TEST_CASE("each ground sublevel couples through exactly one polarization")
{
    for (int m = -1; m <= 1; ++m) {
        double sum = 0.0;
        for (int q = -1; q <= 1; ++q)
            sum += std::norm(dipole_component(m, q));
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-15)); // d0^2 units
    }
}

TEST_CASE("spherical basis transform maps e_0 to z and is unitary")
{
    const Eigen::Vector3cd ez = spherical_to_cartesian(Eigen::Vector3cd(0.0, 1.0, 0.0));
    CHECK((ez - Eigen::Vector3cd(0.0, 0.0, 1.0)).norm() == doctest::Approx(0.0).epsilon(1e-15));

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::Vector3cd v;
        for (int i = 0; i < 3; ++i)
            v[i] = complex(u(rng), u(rng));
        const Eigen::Vector3cd round = cartesian_to_spherical(spherical_to_cartesian(v));
        CHECK((round - v).norm() < 1e-14);
        CHECK(spherical_to_cartesian(v).norm() == doctest::Approx(v.norm()).epsilon(1e-14));
    }
}

TEST_CASE("absorption vectors are orthonormal and select the right photon")
{
    for (int m = -1; m <= 1; ++m)
        for (int mp = -1; mp <= 1; ++mp) {
            const complex overlap = absorption_vector(m).adjoint() * absorption_vector(mp);
            CHECK(std::abs(overlap - (m == mp ? 1.0 : 0.0)) < 1e-14);
        }

    // channel m couples only to the photon with angular momentum q = -m
    for (int m = -1; m <= 1; ++m)
        for (int q = -1; q <= 1; ++q) {
            const complex coupling =
                (absorption_vector(m).transpose() * photon_polarization(q))(0, 0);
            if (q == -m)
                CHECK(std::abs(coupling) == doctest::Approx(1.0).epsilon(1e-14));
            else
                CHECK(std::abs(coupling) < 1e-14);
        }
}

TEST_CASE("frequency grid hits exact endpoints and center")
{
    const FrequencyGrid grid{-10.0, 10.0, 801};
    CHECK(grid.value(0) == -10.0);
    CHECK(grid.value(800) == 10.0);
    CHECK(grid.value(400) == 0.0); // exact: the two-photon point is special-cased on equality
    const auto v = grid.values();
    for (std::size_t i = 1; i < v.size(); ++i)
        CHECK(v[i] > v[i - 1]);
}
