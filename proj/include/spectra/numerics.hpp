#pragma once

#include <functional>
#include <vector>

namespace spectra::num {

using Fn = std::function<double(double)>;

/// Adaptive Simpson quadrature of f over [a,b] to the given relative tolerance.
/// Throws std::runtime_error on non-convergence (depth exhaustion).
double adaptive_simpson(const Fn& f, double a, double b, double rel_tol);

/// Root of f on a bracketing interval [lo,hi] (f(lo)*f(hi) <= 0), bisection
/// to |hi-lo| <= tol_x. Throws std::invalid_argument if not a bracket.
double bisect_root(const Fn& f, double lo, double hi, double tol_x);

/// Maximizer of a unimodal f on [lo,hi] by golden-section search.
double golden_max(const Fn& f, double lo, double hi, double tol_x);

/// Gauss-Legendre nodes/weights on [-1,1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(int npoints);

}  // namespace spectra::num
