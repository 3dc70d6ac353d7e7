#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace eitsim {

using complex = std::complex<double>;

enum class SweepStrategy {
    automatic,          ///< eigendecomposition up to eigen_dim_cap, Hessenberg above
    eigendecomposition, ///< one dense eigensolve; O(dim) per shift
    hessenberg,         ///< one Hessenberg reduction; O(dim^2) per shift
    direct,             ///< full LU per shift; reference path
};

struct SweepOptions {
    SweepStrategy strategy = SweepStrategy::automatic;
    /// Largest dimension the automatic policy hands to the dense
    /// eigensolver; above it the Hessenberg reduction is used, which
    /// needs one fewer full matrix and no eigenvector conditioning.
    std::size_t eigen_dim_cap = 4096;
    /// Eigenvector condition estimate above which the eigendecomposition
    /// is abandoned for per-shift direct solves.
    double condition_threshold = 1e8;
};

/// Evaluates the projected resolvent f(z) = v^dag (z I - H)^{-1} v for
/// many scalar shifts z after a single O(dim^3) preparation of H.
///
/// Strategies:
///  - eigendecomposition: H = V diag(lambda) V^{-1}; the weights
///    w_i = (v^dag V)_i (V^{-1} v)_i give f(z) = sum_i w_i/(z - lambda_i)
///    in O(dim) per shift.  When the eigenvector matrix is too
///    ill-conditioned (nearly defective H) the sweep silently falls back
///    to the direct strategy.
///  - hessenberg: H = Q Hbar Q^H with Hbar upper Hessenberg; per shift a
///    packed-storage Hessenberg LU with adjacent-row pivoting solves
///    (z I - Hbar) y = Q^H v in O(dim^2).
///  - direct: per-shift partial-pivot LU of (z I - H).
class ResolventSweep {
public:
    /// Consumes H.  v is the common source and probe vector.
    ResolventSweep(Eigen::MatrixXcd hamiltonian, Eigen::VectorXcd v,
                   const SweepOptions& options = {});

    complex evaluate(complex shift) const;

    SweepStrategy active_strategy() const { return active_; }

    /// Eigenvalues, available on the eigendecomposition path.
    const Eigen::VectorXcd& eigenvalues() const;

private:
    void prepare_eigen(Eigen::MatrixXcd&& h, const SweepOptions& options);
    void prepare_hessenberg(Eigen::MatrixXcd&& h);
    complex evaluate_eigen(complex shift) const;
    complex evaluate_hessenberg(complex shift) const;
    complex evaluate_direct(complex shift) const;

    SweepStrategy active_ = SweepStrategy::direct;
    std::size_t dim_ = 0;
    Eigen::VectorXcd v_;

    // eigendecomposition cache
    Eigen::VectorXcd eigenvalues_;
    Eigen::VectorXcd weights_;

    // hessenberg cache: packed rows of Hbar (row r holds columns
    // max(0, r-1) .. dim-1) and the projected vector Q^H v
    std::vector<complex> packed_;
    std::vector<std::size_t> row_offset_;
    Eigen::VectorXcd projected_;

    // direct path keeps H itself
    Eigen::MatrixXcd h_;
};

/// Eigenvalues of a general complex matrix (LAPACK zgeev, values only).
Eigen::VectorXcd complex_eigenvalues(Eigen::MatrixXcd h);

} // namespace eitsim
