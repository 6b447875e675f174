#pragma once

#include <functional>
#include <vector>

#include "spectra/grids.hpp"
#include "spectra/matrix.hpp"
#include "spectra/problems.hpp"

namespace spectra::fd {

/// Stencil coefficients of the (2 eta + 1)-point central second-difference
/// scheme: d[0..eta] with d[0] = -2 sum_{k>=1} d[k] and alternating signs.
struct Coefficients {
    int eta = 0;
    std::vector<double> d;
};

/// Coefficients for 1 <= eta <= 20, computed by the multiplicative ratio
/// form (no factorial overflow).
Coefficients coefficients(int eta);

/// Frequency factor f_eta(theta) = d0 + 2 sum d_k cos(k theta) on [0,pi],
/// with f_eta(0) = 0 exactly by construction.
std::function<double(double)> frequency_symbol(int eta);

/// Assembled FD discretization: diffusion band L plus sampled reaction and
/// weight diagonals on the mapped grid.
struct System {
    BandMatrix L;
    std::vector<double> q_diag;
    std::vector<double> w_diag;
    grids::ExtendedGrid grid;
};

/// Assembles the (2 eta + 1)-point scheme for -(p u')' + q u = lambda w u on
/// the tau-mapped grid with n interior nodes. Dirichlet rows only; ghost
/// columns fold into the diagonal through the zero-row-sum identity.
System assemble(const problems::SLProblem& prob, const grids::Diffeomorphism& map, int n, int eta);

/// The eigenvalue-carrying operator of a system. When L + Q is symmetric
/// (1e-12 relative) the similar symmetric form W^{-1/2}(L+Q)W^{-1/2} is
/// returned; otherwise W^{-1}(L+Q).
struct Operator {
    BandMatrix A;
    bool symmetric = false;
};
Operator to_operator(const System& sys);

}  // namespace spectra::fd
