#pragma once

#include <string>
#include <vector>

#include "spectra/analysis.hpp"
#include "spectra/symbol.hpp"

namespace spectra::tables {

/// Desk-scale cap on eigensolve sizes; GLT_SPECTRA_MAX_N overrides the
/// default of 5000.
int max_n_cap();
int capped(int n, std::vector<std::string>* notes = nullptr);

// --- experiment drivers -----------------------------------------------------

/// Ascending eigenvalues of the unweighted FD discretization of the
/// Euler-Cauchy problem (exp_grid selects the exponential Liouville grid).
/// The nonsymmetric path verifies the realness of the computed spectrum.
std::vector<double> fd_euler_spectrum(double alpha, int n, int eta, bool exp_grid);

/// Ascending generalized eigenvalues of the IgA pair (dimension n+eta-1).
std::vector<double> iga_euler_spectrum(double alpha, int n, int eta, bool exp_grid);

symbol::SeparableSymbol fd_euler_symbol(double alpha, int eta, bool exp_grid);
symbol::SeparableSymbol iga_euler_symbol(double alpha, int eta, bool exp_grid);

analysis::MaxRelErr fd_euler_max_rel_err(double alpha, int n, int eta, bool exp_grid);
analysis::MaxRelErr iga_euler_max_rel_err(double alpha, int n, int eta, bool exp_grid,
                                          bool exclude_outliers);
int iga_outlier_count(double alpha, int n, int eta, bool exp_grid, double eps = 0.01);

/// sup_k |omega_tilde_alpha(k/(n+1)) - (2 - 2 cos(pi k/(n+1)))| with the
/// exact rearrangement.
double table1_sup_norm(double alpha, int n);

/// |analytic_err_k / c_{alpha,k} - 1| at mesh size n, exact rearrangement and
/// exact reference spectrum.
double saturation_deviation(double alpha, int k, int n);

/// FD eta=1 uniform grid: max relative eigenvalue error against the exact
/// spectrum, compared with the symbol gap (exact rearrangement).
struct NecCondCheck {
    double max_err = 0.0;
    double gap = 0.0;
    double agreement = 0.0;    // |max_err / gap - 1|
    double argmax_ratio = 0.0; // argmax_k / n
};
NecCondCheck necessary_condition_check(double alpha, int n, int gap_grid_n = 1000);

// --- CSV emission -----------------------------------------------------------

/// Regenerates the numeric content of table id (1..8) into outdir; writes
/// table<id>.csv and provenance.txt. jobs > 1 runs independent solves
/// concurrently (output is identical either way).
void write_table(int id, const std::string& outdir, int jobs = 1);

/// Plot-ready series for a named figure: "eig-symbol-comparison",
/// "relative-errors", "symbol-family".
void write_figure(const std::string& id, const std::string& outdir);

}  // namespace spectra::tables
