#include "eitsim/resolvent.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <cmath>
#include <stdexcept>
#include <utility>

#include "eitsim/errors.hpp"

namespace eitsim {

namespace {

int checked_int(std::size_t n)
{
    if (n > static_cast<std::size_t>(std::numeric_limits<lapack_int>::max()))
        throw resource_error("matrix dimension exceeds LAPACK index range");
    return static_cast<int>(n);
}

} // namespace

ResolventSweep::ResolventSweep(Eigen::MatrixXcd hamiltonian, Eigen::VectorXcd v,
                               const SweepOptions& options)
    : dim_(static_cast<std::size_t>(hamiltonian.rows())), v_(std::move(v))
{
    if (hamiltonian.rows() != hamiltonian.cols())
        throw std::invalid_argument("ResolventSweep: matrix must be square");
    if (static_cast<std::size_t>(v_.size()) != dim_)
        throw std::invalid_argument("ResolventSweep: vector length mismatch");
    if (dim_ == 0)
        throw std::invalid_argument("ResolventSweep: empty matrix");

    SweepStrategy chosen = options.strategy;
    if (chosen == SweepStrategy::automatic)
        chosen = (dim_ <= options.eigen_dim_cap) ? SweepStrategy::eigendecomposition
                                                 : SweepStrategy::hessenberg;

    switch (chosen) {
    case SweepStrategy::eigendecomposition:
        prepare_eigen(std::move(hamiltonian), options);
        break;
    case SweepStrategy::hessenberg:
        prepare_hessenberg(std::move(hamiltonian));
        break;
    default:
        h_ = std::move(hamiltonian);
        active_ = SweepStrategy::direct;
        break;
    }
}

void ResolventSweep::prepare_eigen(Eigen::MatrixXcd&& h, const SweepOptions& options)
{
    const int n = checked_int(dim_);
    Eigen::MatrixXcd work = h; // zgeev destroys its input; keep h for the fallback
    Eigen::MatrixXcd vectors(n, n);
    eigenvalues_.resize(n);

    const int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n, work.data(), n,
                                   eigenvalues_.data(), nullptr, n, vectors.data(), n);
    if (info != 0)
        throw solver_error("zgeev failed with info = " + std::to_string(info));
    work.resize(0, 0);

    // weights w_i = (v^dag V)_i (V^{-1} v)_i; an ill-conditioned
    // eigenvector matrix (nearly defective H) invalidates the spectral
    // reconstruction, so fall back to per-shift direct solves.
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(vectors);
    if (lu.rcond() < 1.0 / options.condition_threshold) {
        h_ = std::move(h);
        active_ = SweepStrategy::direct;
        return;
    }
    const Eigen::VectorXcd left = vectors.transpose() * v_.conjugate(); // (v^dag V)_i
    const Eigen::VectorXcd right = lu.solve(v_);                        // (V^{-1} v)_i
    weights_.resize(n);
    for (int i = 0; i < n; ++i)
        weights_[i] = left[i] * right[i];
    active_ = SweepStrategy::eigendecomposition;
}

void ResolventSweep::prepare_hessenberg(Eigen::MatrixXcd&& h)
{
    const int n = checked_int(dim_);
    Eigen::VectorXcd tau(std::max(1, n - 1));

    int info = LAPACKE_zgehrd(LAPACK_COL_MAJOR, n, 1, n, h.data(), n, tau.data());
    if (info != 0)
        throw solver_error("zgehrd failed with info = " + std::to_string(info));

    projected_ = v_;
    if (n > 1) {
        info = LAPACKE_zunmhr(LAPACK_COL_MAJOR, 'L', 'C', n, 1, 1, n, h.data(), n,
                              tau.data(), projected_.data(), n);
        if (info != 0)
            throw solver_error("zunmhr failed with info = " + std::to_string(info));
    }

    // Pack the upper Hessenberg part row by row; the reflector data below
    // the subdiagonal is dropped and the full matrix is released.
    row_offset_.resize(dim_ + 1);
    row_offset_[0] = 0;
    for (std::size_t r = 0; r < dim_; ++r) {
        const std::size_t first = (r == 0) ? 0 : r - 1;
        row_offset_[r + 1] = row_offset_[r] + (dim_ - first);
    }
    packed_.resize(row_offset_[dim_]);
    for (std::size_t r = 0; r < dim_; ++r) {
        const std::size_t first = (r == 0) ? 0 : r - 1;
        complex* dst = packed_.data() + row_offset_[r];
        for (std::size_t c = first; c < dim_; ++c)
            *dst++ = h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
    h.resize(0, 0);
    active_ = SweepStrategy::hessenberg;
}

const Eigen::VectorXcd& ResolventSweep::eigenvalues() const
{
    if (active_ != SweepStrategy::eigendecomposition)
        throw std::logic_error("eigenvalues are only cached on the eigendecomposition path");
    return eigenvalues_;
}

complex ResolventSweep::evaluate(complex shift) const
{
    switch (active_) {
    case SweepStrategy::eigendecomposition:
        return evaluate_eigen(shift);
    case SweepStrategy::hessenberg:
        return evaluate_hessenberg(shift);
    default:
        return evaluate_direct(shift);
    }
}

complex ResolventSweep::evaluate_eigen(complex shift) const
{
    complex sum{0.0, 0.0};
    for (Eigen::Index i = 0; i < weights_.size(); ++i)
        sum += weights_[i] / (shift - eigenvalues_[i]);
    return sum;
}

complex ResolventSweep::evaluate_hessenberg(complex shift) const
{
    const std::size_t n = dim_;
    // working copy of z I - Hbar in the packed layout
    thread_local std::vector<complex> work;
    work.resize(packed_.size());
    for (std::size_t i = 0; i < packed_.size(); ++i)
        work[i] = -packed_[i];
    for (std::size_t r = 0; r < n; ++r)
        work[row_offset_[r] + (r == 0 ? r : 1)] += shift;

    Eigen::VectorXcd y = projected_;
    auto row = [&](std::size_t r) { return work.data() + row_offset_[r]; };
    auto first_col = [](std::size_t r) { return (r == 0) ? std::size_t{0} : r - 1; };

    // forward elimination with adjacent-row pivoting
    for (std::size_t j = 0; j + 1 < n; ++j) {
        complex* upper = row(j) + (j - first_col(j));     // row j from column j
        complex* lower = row(j + 1);                       // row j+1 starts at column j
        const std::size_t len = n - j;
        if (std::abs(lower[0]) > std::abs(upper[0])) {
            for (std::size_t c = 0; c < len; ++c)
                std::swap(upper[c], lower[c]);
            std::swap(y[static_cast<Eigen::Index>(j)], y[static_cast<Eigen::Index>(j + 1)]);
        }
        const complex m = lower[0] / upper[0];
        for (std::size_t c = 1; c < len; ++c)
            lower[c] -= m * upper[c];
        lower[0] = 0.0;
        y[static_cast<Eigen::Index>(j + 1)] -= m * y[static_cast<Eigen::Index>(j)];
    }

    // back substitution
    for (std::size_t r = n; r-- > 0;) {
        const complex* wr = row(r) + (r - first_col(r));
        complex acc = y[static_cast<Eigen::Index>(r)];
        for (std::size_t c = r + 1; c < n; ++c)
            acc -= wr[c - r] * y[static_cast<Eigen::Index>(c)];
        y[static_cast<Eigen::Index>(r)] = acc / wr[0];
    }

    return projected_.dot(y); // Eigen's dot conjugates the left argument
}

complex ResolventSweep::evaluate_direct(complex shift) const
{
    Eigen::MatrixXcd m = -h_;
    m.diagonal().array() += shift;
    const Eigen::VectorXcd y = m.partialPivLu().solve(v_);
    return v_.dot(y);
}

Eigen::VectorXcd complex_eigenvalues(Eigen::MatrixXcd h)
{
    if (h.rows() != h.cols())
        throw std::invalid_argument("complex_eigenvalues: matrix must be square");
    const int n = checked_int(static_cast<std::size_t>(h.rows()));
    Eigen::VectorXcd values(n);
    const int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, h.data(), n, values.data(),
                                   nullptr, n, nullptr, n);
    if (info != 0)
        throw solver_error("zgeev failed with info = " + std::to_string(info));
    return values;
}

} // namespace eitsim
