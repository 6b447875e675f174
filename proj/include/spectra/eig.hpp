#pragma once

#include <span>
#include <string>
#include <vector>

#include "spectra/matrix.hpp"

namespace spectra::eig {

struct SpectrumResult {
    std::vector<double> values;  // ascending by real part
    std::vector<double> imag;    // empty for symmetric paths
    double residual_bound = 0.0;
    std::string method;

    bool essentially_real(double tol_abs) const;
};

/// Number of eigenvalues of the symmetric tridiagonal (diag, off) strictly
/// below sigma, by the LDL^T inertia recurrence.
int sturm_count(std::span<const double> diag, std::span<const double> off, double sigma);

/// Eigenvalues k_lo..k_hi (1-based, ascending) of a symmetric tridiagonal
/// matrix by Sturm-sequence bisection. k_hi = -1 means all n.
std::vector<double> eigvals_tridiag(std::span<const double> diag, std::span<const double> off,
                                    int k_lo = 1, int k_hi = -1);

/// Reduce a dense symmetric matrix to tridiagonal form (Householder).
/// Destroys `a`; returns diag/off of the similar tridiagonal matrix.
void householder_tridiagonalize(DenseMatrix& a, std::vector<double>& diag, std::vector<double>& off);

/// All eigenvalues of a symmetric matrix. Tridiagonal inputs go straight to
/// Sturm bisection; banded/dense inputs are reduced to tridiagonal first.
/// Throws std::invalid_argument if the input is not symmetric to 1e-12
/// relative, std::invalid_argument beyond the dense size cap (n = 3000).
SpectrumResult eigvals_sym(const BandMatrix& a);
SpectrumResult eigvals_sym(const DenseMatrix& a);

/// Eigenvalues of the pencil (K, M) with M SPD: Cholesky M = C C^T followed
/// by eigvals_sym(C^{-1} K C^{-T}). Throws std::runtime_error if the
/// Cholesky factorization breaks down (M not SPD).
SpectrumResult eigvals_gen_sym(const BandMatrix& k, const BandMatrix& m);

/// All eigenvalues of a general real square matrix via Householder
/// Hessenberg reduction and Francis double-shift QR, sorted by real part.
/// Deterministic exceptional shifts; throws std::runtime_error if any
/// eigenvalue fails to converge within 50 iterations.
SpectrumResult eigvals_general(const DenseMatrix& a);
SpectrumResult eigvals_general(const BandMatrix& a);

}  // namespace spectra::eig
