#pragma once

#include <vector>

#include "hypersync/matrix.hpp"

namespace hypersync {

/// Full eigendecomposition of a symmetric matrix. Eigenvalues ascending;
/// vectors.col(i) is the orthonormal eigenvector for eigenvalues[i], with the
/// first nonzero component of each vector made positive so the decomposition
/// is deterministic.
struct Spectrum {
    std::vector<double> eigenvalues;
    Matrix vectors;  // n x n, column i <-> eigenvalues[i]

    int n() const { return static_cast<int>(eigenvalues.size()); }
    std::vector<double> eigenvector(int i) const;
};

/// Relative zero tolerance used by the spectral predicates.
inline constexpr double kSpectralTol = 1e-9;

/// Cyclic Jacobi on a dense copy. Converges when the off-diagonal Frobenius
/// norm drops below 1e-12 * ||M||_F; throws NoConvergence after 100 sweeps
/// and NotSymmetric when the input storage is not exactly symmetric.
Spectrum eig_sym(const SymMatrix& m);

/// max |lambda_i| (the operator norm of a symmetric matrix).
double operator_norm(const SymMatrix& m);

double max_eigenvalue(const SymMatrix& m);
double min_eigenvalue(const SymMatrix& m);

struct DiffusionReport {
    bool is_diffusion = false;
    int zero_multiplicity = 0;
    bool has_ones_kernel = false;
};

/// True iff exactly one eigenvalue sits within tol*scale of zero, its
/// eigenvector is parallel to the all-ones vector, and every other eigenvalue
/// is negative. scale = max(1, ||M||_inf).
DiffusionReport is_diffusion_matrix(const SymMatrix& m, double tol = kSpectralTol);

struct NonzeroExtremes {
    double lambda_min_abs;
    double lambda_max_abs;
};

/// Min and max |lambda| over eigenvalues with |lambda| > tol*scale; throws
/// AllZero when no eigenvalue clears the threshold.
NonzeroExtremes nonzero_extremes(const Spectrum& s, double tol = kSpectralTol);

/// Delta with Delta^2 = -M for a negative semidefinite M, built from the
/// spectral square root. Eigenvalues above +tol*scale are rejected.
SymMatrix spectral_sqrt_neg(const SymMatrix& m, double tol = kSpectralTol);

}  // namespace hypersync
