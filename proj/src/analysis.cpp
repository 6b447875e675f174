#include "spectra/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spectra/eig.hpp"
#include "spectra/fd.hpp"
#include "spectra/grids.hpp"

namespace spectra::analysis {

ErrorReport relative_errors(std::span<const double> discrete, std::span<const double> reference,
                            const symbol::MonotoneRearrangement& rear, int n) {
    const int m = static_cast<int>(discrete.size());
    if (static_cast<int>(reference.size()) < m)
        throw std::invalid_argument("relative_errors: reference shorter than discrete spectrum");
    ErrorReport rep;
    rep.k.resize(m);
    rep.numerical_err.resize(m);
    rep.analytic_err.resize(m);
    const double wt = static_cast<double>(n + 1) * (n + 1);
    for (int k = 1; k <= m; ++k) {
        const double ref = reference[k - 1];
        if (ref == 0.0) throw std::invalid_argument("relative_errors: zero reference eigenvalue");
        rep.k[k - 1] = k;
        rep.numerical_err[k - 1] = std::abs(discrete[k - 1] / ref - 1.0);
        rep.analytic_err[k - 1] = std::abs(wt * rear(static_cast<double>(k) / (n + 1)) / ref - 1.0);
        if (rep.numerical_err[k - 1] >= rep.max_err) {
            rep.max_err = rep.numerical_err[k - 1];
            rep.argmax_k = k;
        }
    }
    return rep;
}

double saturation_constant(double alpha, int k) {
    const double shift = 0.25 * alpha;
    const double kk = static_cast<double>(k) * k * M_PI * M_PI;
    return shift / (kk + shift);
}

GapReport necessary_condition_gap(const std::function<double(double)>& omega_tilde, double B, int grid_n) {
    GapReport rep;
    rep.grid_n = grid_n;
    const double b2 = B * B;
    for (int k = 1; k <= grid_n; ++k) {
        const double x = static_cast<double>(k) / (grid_n + 1);
        const double g = std::abs(omega_tilde(x) * b2 / (x * x * M_PI * M_PI) - 1.0);
        if (g > rep.gap) {
            rep.gap = g;
            rep.argmax_x = x;
        }
    }
    return rep;
}

GapReport necessary_condition_gap(const symbol::MonotoneRearrangement& rear, double B, int grid_n) {
    return necessary_condition_gap([&rear](double x) { return rear(x); }, B, grid_n);
}

MaxRelErr max_relative_error(std::span<const double> discrete, std::span<const double> reference,
                             bool exclude_outliers, const symbol::SeparableSymbol* sym,
                             double weight, double outlier_eps) {
    const int m = static_cast<int>(discrete.size());
    if (static_cast<int>(reference.size()) < m)
        throw std::invalid_argument("max_relative_error: reference shorter than discrete spectrum");
    symbol::Range rng;
    if (exclude_outliers) {
        if (!sym) throw std::invalid_argument("max_relative_error: exclusion requires a symbol");
        rng = symbol::essential_range(*sym);
    }
    MaxRelErr out;
    bool any = false;
    for (int k = 1; k <= m; ++k) {
        if (exclude_outliers) {
            const double lam = discrete[k - 1] / weight;
            const bool outlier = rng.bounded
                                     ? (lam < rng.lo - outlier_eps * (rng.hi - rng.lo) ||
                                        lam > rng.hi + outlier_eps * (rng.hi - rng.lo))
                                     : (lam < rng.lo - outlier_eps * std::max(std::abs(rng.lo), 1.0));
            if (outlier) {
                ++out.outliers_excluded;
                continue;
            }
        }
        const double err = std::abs(discrete[k - 1] / reference[k - 1] - 1.0);
        if (!any || err > out.value) {
            out.value = err;
            out.argmax_k = k;
            any = true;
        }
    }
    if (!any) throw std::runtime_error("max_relative_error: every eigenvalue excluded as an outlier");
    return out;
}

L1Stats l1_case_stats(int n, int r) {
    if (n < 10) throw std::invalid_argument("l1_case_stats: n must be >= 10");
    const problems::SLProblem prob = problems::l1_problem();
    const fd::System sys = fd::assemble(prob, grids::identity_map(), n, 1);
    std::vector<double> d(n), e(n - 1);
    for (int i = 0; i < n; ++i) d[i] = sys.L.get(i, i);
    for (int i = 0; i + 1 < n; ++i) e[i] = sys.L.get(i, i + 1);
    const std::vector<double> lambda = eig::eigvals_tridiag(d, e);

    const double wt = static_cast<double>(n + 1) * (n + 1);
    const symbol::MonotoneRearrangement rear = symbol::rearrange(symbol::l1_symbol(), r);

    L1Stats st;
    double sum = 0.0;
    double omega_n = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double lam_w = lambda[k - 1] / wt;
        const double om = rear(static_cast<double>(k) / (n + 1));
        st.sup_abs_err = std::max(st.sup_abs_err, std::abs(om - lam_w));
        sum += lam_w;
        if (k == n) omega_n = om;
    }
    const double root = std::sqrt(static_cast<double>(n + 1));
    // the top index is where the divergence manifests; quantiles below the
    // theta-grid resolution (k of order 1 when r = n) carry sampling noise
    // and are not counted
    st.max_analytic_rel_err = std::abs(omega_n / (lambda[n - 1] / wt) - 1.0);
    st.tail_ratio = omega_n / root;
    st.eig_ratio = lambda[n - 1] / wt / root;
    st.mean_eig = sum / n;
    return st;
}

Laplace2DReport laplace2d_gap(int n) {
    if (n > 256) throw std::invalid_argument("laplace2d_gap: n over cap (256)");
    std::vector<double> disc, cont;
    disc.reserve(static_cast<size_t>(n) * n);
    cont.reserve(static_cast<size_t>(n) * n);
    const double wt = static_cast<double>(n + 1) * (n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            disc.push_back(wt * (4.0 - 2.0 * std::cos(i * M_PI / (n + 1)) - 2.0 * std::cos(j * M_PI / (n + 1))));
            cont.push_back(M_PI * M_PI * (static_cast<double>(i) * i + static_cast<double>(j) * j));
        }
    std::sort(disc.begin(), disc.end());
    std::sort(cont.begin(), cont.end());
    Laplace2DReport rep;
    rep.bound = 1.0 - 4.0 / (M_PI * M_PI);
    for (size_t k = 0; k < disc.size(); ++k)
        rep.max_rel_err = std::max(rep.max_rel_err, std::abs(disc[k] / cont[k] - 1.0));
    return rep;
}

}  // namespace spectra::analysis
