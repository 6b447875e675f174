#pragma once

#include <functional>
#include <vector>

#include "spectra/grids.hpp"
#include "spectra/matrix.hpp"
#include "spectra/problems.hpp"

namespace spectra::iga {

/// Cardinal B-spline psi_[s] of degree s, supported on [0, s+1].
/// Returns 0 outside the support.
double cardinal_bspline(int s, double x);

/// Second derivative psi''_[s](x) = psi_[s-2](x) - 2 psi_[s-2](x-1) + psi_[s-2](x-2).
/// Requires s >= 2.
double cardinal_bspline_d2(int s, double x);

/// IgA frequency factor f_eta = g_eta / h_eta on [0,pi], built from cardinal
/// B-spline values of degree 2 eta + 1 at integer offsets. 1 <= eta <= 10.
std::function<double(double)> frequency_symbol(int eta);

/// B-spline space of degree eta with n uniform interior breakpoints on [a,b]
/// and open (eta+1)-fold endpoint knots. dim() counts the interior basis
/// functions (boundary pair removed).
struct BSplineSpace {
    int eta = 0;
    int n = 0;
    double a = 0.0, b = 0.0;
    std::vector<double> knots;

    int dim() const { return n + eta - 1; }
    int full_dim() const { return n + eta + 1; }
};
BSplineSpace make_space(double a, double b, int n, int eta);

/// Active basis values and first derivatives at x: entries j = 0..eta are
/// functions span-eta+j. Zero-denominator terms follow the 0/0 -> 0 rule.
struct BasisEval {
    int span = 0;
    std::vector<double> value;
    std::vector<double> deriv;
};
BasisEval evaluate_basis(const BSplineSpace& space, double x);

struct GalerkinPair {
    BandMatrix K;  // stiffness, symmetric, bandwidth eta
    BandMatrix M;  // mass, SPD, bandwidth eta
    int n_breakpoints = 0;
    int eta = 0;
};

/// Stiffness/mass pair including the two boundary functions; used by the
/// partition-of-unity checks.
GalerkinPair assemble_full(const problems::SLProblem& prob, const grids::Diffeomorphism& map, int n, int eta);

/// Galerkin pair on the interior basis (first/last functions removed).
/// Requires q = 0 and Dirichlet boundary conditions; fixed Gauss-Legendre
/// quadrature with eta+2 nodes per knot span; i <= j computed and mirrored.
GalerkinPair assemble(const problems::SLProblem& prob, const grids::Diffeomorphism& map, int n, int eta);

/// Handle for eig::eigvals_gen_sym; M^{-1} K is never formed.
struct GenEigProblem {
    const BandMatrix& K;
    const BandMatrix& M;
};
inline GenEigProblem to_eigenproblem(const GalerkinPair& pair) { return {pair.K, pair.M}; }

}  // namespace spectra::iga
