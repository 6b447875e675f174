#include "spectra/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <algorithm>

namespace spectra::num {

namespace {

double simpson(const Fn& f, double a, double fa, double b, double fb, double* fm_out) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    *fm_out = fm;
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const Fn& f, double a, double fa, double m, double fm, double b, double fb,
                   double whole, double abs_tol, int depth) {
    double fl, fr;
    const double left = simpson(f, a, fa, m, fm, &fl);
    const double right = simpson(f, m, fm, b, fb, &fr);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * abs_tol || depth <= 0) {
        if (depth <= 0 && std::abs(delta) > 1e6 * abs_tol)
            throw std::runtime_error("adaptive_simpson: no convergence");
        return left + right + delta / 15.0;
    }
    const double ml = 0.5 * (a + m), mr = 0.5 * (m + b);
    return simpson_rec(f, a, fa, ml, fl, m, fm, left, 0.5 * abs_tol, depth - 1) +
           simpson_rec(f, m, fm, mr, fr, b, fb, right, 0.5 * abs_tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const Fn& f, double a, double b, double rel_tol) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b);
    double fm;
    const double whole = simpson(f, a, fa, b, fb, &fm);
    // coarse magnitude estimate for the absolute tolerance; floor keeps
    // near-zero integrals from demanding impossible precision
    const double scale = std::max({std::abs(whole), std::abs(b - a) * std::abs(fm), 1e-30});
    return simpson_rec(f, a, fa, 0.5 * (a + b), fm, b, fb, whole, rel_tol * scale, 52);
}

double bisect_root(const Fn& f, double lo, double hi, double tol_x) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0)) throw std::invalid_argument("bisect_root: interval does not bracket a root");
    for (int it = 0; it < 200 && hi - lo > tol_x; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) { lo = mid; flo = fm; } else { hi = mid; }
    }
    return 0.5 * (lo + hi);
}

double golden_max(const Fn& f, double lo, double hi, double tol_x) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > tol_x) {
        if (f1 < f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + phi * (hi - lo); f2 = f(x2);
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - phi * (hi - lo); f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

GaussRule gauss_legendre(int npoints) {
    if (npoints < 1) throw std::invalid_argument("gauss_legendre: npoints < 1");
    GaussRule rule;
    rule.nodes.resize(npoints);
    rule.weights.resize(npoints);
    const int m = (npoints + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton on P_n with the Chebyshev-like initial guess
        double x = std::cos(M_PI * (i + 0.75) / (npoints + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < npoints; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = npoints * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[npoints - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[npoints - 1 - i] = w;
    }
    return rule;
}

}  // namespace spectra::num
