#pragma once

#include <functional>
#include <span>
#include <vector>

#include "spectra/symbol.hpp"

namespace spectra::analysis {

/// Numerical and analytic relative errors against a reference spectrum.
struct ErrorReport {
    std::vector<int> k;
    std::vector<double> numerical_err;
    std::vector<double> analytic_err;
    double max_err = 0.0;  // over numerical_err
    int argmax_k = 0;      // 1-based
    int outliers_excluded = 0;
};

/// numerical_err_k = |lambda_k / ref_k - 1|,
/// analytic_err_k  = |(n+1)^2 omega_tilde(k/(n+1)) / ref_k - 1|.
ErrorReport relative_errors(std::span<const double> discrete, std::span<const double> reference,
                            const symbol::MonotoneRearrangement& rear, int n);

/// (alpha/4) / (k^2 pi^2 + alpha/4): the unavoidable analytic relative error
/// of uniform symbol sampling for the Euler-Cauchy problem.
double saturation_constant(double alpha, int k);

struct GapReport {
    double gap = 0.0;
    double argmax_x = 0.0;
    int grid_n = 0;
};

/// max over x in {k/(grid_n+1)} of |omega_tilde(x) B^2 / (x^2 pi^2) - 1|.
GapReport necessary_condition_gap(const symbol::MonotoneRearrangement& rear, double B, int grid_n);
GapReport necessary_condition_gap(const std::function<double(double)>& omega_tilde, double B, int grid_n);

struct MaxRelErr {
    double value = 0.0;
    int argmax_k = 0;  // 1-based
    int outliers_excluded = 0;
};

/// Maximum of |lambda_k / ref_k - 1|; with exclusion on, indices whose
/// weighted eigenvalue lambda_k / weight lies outside the symbol's expanded
/// essential range are skipped. Throws std::runtime_error if every index is
/// excluded.
MaxRelErr max_relative_error(std::span<const double> discrete, std::span<const double> reference,
                             bool exclude_outliers, const symbol::SeparableSymbol* sym,
                             double weight, double outlier_eps = 0.01);

/// The L^1-coefficient demonstration statistics (3-point FD for
/// p(x) = x^{-1/2} on (0,1), Dirichlet, (n+1)^{-2}-weighted spectrum).
struct L1Stats {
    double sup_abs_err = 0.0;
    double max_analytic_rel_err = 0.0;
    double tail_ratio = 0.0;  // omega_tilde at k=n over sqrt(n+1)
    double eig_ratio = 0.0;   // weighted lambda_n over sqrt(n+1)
    double mean_eig = 0.0;    // mean weighted eigenvalue
};
L1Stats l1_case_stats(int n, int r);

/// 2-D Dirichlet Laplacian on the unit square: analytic FD eigenvalues vs
/// continuous ones over the index box {1..n}^2, plus the 1 - 4/pi^2 bound.
struct Laplace2DReport {
    double max_rel_err = 0.0;
    double bound = 0.0;
};
Laplace2DReport laplace2d_gap(int n);

}  // namespace spectra::analysis
