#include "eitsim/params.hpp"

#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "eitsim/errors.hpp"

namespace eitsim {

double ModelParams::box_length() const
{
    return std::cbrt(static_cast<double>(atom_count) / density);
}

namespace {

double get_number(const nlohmann::json& j, const std::string& key, double fallback)
{
    if (!j.contains(key))
        return fallback;
    const auto& v = j.at(key);
    if (!v.is_number())
        throw config_error("params." + key + ": expected a number");
    return v.get<double>();
}

std::int64_t get_integer(const nlohmann::json& j, const std::string& key, std::int64_t fallback)
{
    if (!j.contains(key))
        return fallback;
    const auto& v = j.at(key);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw config_error("params." + key + ": expected an integer");
    return v.get<std::int64_t>();
}

} // namespace

void check_params(const ModelParams& p)
{
    if (!(p.density > 0.0) || !std::isfinite(p.density))
        throw config_error("density must be positive");
    if (p.atom_count < 1)
        throw config_error("atom_count must be >= 1");
    if (p.neighbor_count < 1)
        throw config_error("neighbor_count must be >= 1");
    if (p.neighbor_count > p.atom_count)
        throw config_error("neighbor_count exceeds atom_count");
    if (p.rabi_control < 0.0 || !std::isfinite(p.rabi_control))
        throw config_error("rabi_control must be non-negative");
    if (!std::isfinite(p.control_detuning))
        throw config_error("control_detuning must be finite");
    if (p.min_separation < 0.0)
        throw config_error("min_separation must be non-negative");
    if (!(p.slab_length >= 0.0))
        throw config_error("slab_length must be non-negative");
    if (p.basis_cap < 1)
        throw config_error("basis_cap must be >= 1");
}

ModelParams validate_params(const nlohmann::json& raw)
{
    if (!raw.is_object())
        throw config_error("params: expected a JSON object");

    static const std::set<std::string> known = {
        "density", "rabi_control", "control_detuning", "slab_length",
        "atom_count", "neighbor_count", "min_separation", "seed", "basis_cap",
    };
    for (const auto& [key, value] : raw.items()) {
        if (key.rfind("_", 0) == 0)
            continue; // underscore-prefixed keys are free-form comments
        if (!known.count(key))
            throw config_error("params: unknown key \"" + key + "\"");
    }

    ModelParams p;
    p.density = get_number(raw, "density", p.density);
    p.rabi_control = get_number(raw, "rabi_control", p.rabi_control);
    p.control_detuning = get_number(raw, "control_detuning", p.control_detuning);
    p.atom_count = static_cast<int>(get_integer(raw, "atom_count", p.atom_count));
    p.neighbor_count = static_cast<int>(get_integer(raw, "neighbor_count", p.neighbor_count));
    p.min_separation = get_number(raw, "min_separation", p.min_separation);
    const auto seed = get_integer(raw, "seed", static_cast<std::int64_t>(p.seed));
    if (seed < 0)
        throw config_error("params.seed: expected a non-negative integer");
    p.seed = static_cast<std::uint64_t>(seed);
    p.basis_cap = static_cast<std::size_t>(get_integer(raw, "basis_cap",
                                                       static_cast<std::int64_t>(p.basis_cap)));

    if (!(p.density > 0.0) || !std::isfinite(p.density))
        throw config_error("density must be positive");
    if (p.atom_count < 1)
        throw config_error("atom_count must be >= 1");
    // Derived cubic-box slab length unless explicitly overridden.
    p.slab_length = get_number(raw, "slab_length", p.box_length());

    check_params(p);
    return p;
}

} // namespace eitsim
