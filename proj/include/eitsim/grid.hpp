#pragma once

#include <vector>

#include "eitsim/errors.hpp"

namespace eitsim {

/// Uniform probe-detuning grid in units of gamma.
struct FrequencyGrid {
    double min = -10.0;
    double max = 10.0;
    int points = 801;

    /// i-th node, computed in the symmetric form
    /// (min*(points-1-i) + max*i)/(points-1) so that endpoints are exact
    /// and, on symmetric grids with an odd point count, the center node
    /// is exact as well (the two-photon resonance is special-cased on
    /// exact equality).
    double value(int i) const
    {
        if (points == 1)
            return min;
        const double n = static_cast<double>(points - 1);
        return (min * (n - static_cast<double>(i)) + max * static_cast<double>(i)) / n;
    }

    std::vector<double> values() const
    {
        std::vector<double> v(static_cast<std::size_t>(points));
        for (int i = 0; i < points; ++i)
            v[static_cast<std::size_t>(i)] = value(i);
        return v;
    }

    void validate() const
    {
        if (points < 1)
            throw config_error("grid: points must be >= 1");
        if (points > 1 && !(min < max))
            throw config_error("grid: min must be < max");
    }
};

} // namespace eitsim
