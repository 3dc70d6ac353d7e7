#pragma once

#include <stdexcept>
#include <string>

namespace eitsim {

/// Malformed or inconsistent run configuration (bad schema, bad values).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: non-convergence, unphysical branch, packing failure.
class solver_error : public std::runtime_error {
public:
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

/// A requested computation exceeds a configured resource cap.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace eitsim
