#include "spectra/iga.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spectra/numerics.hpp"

namespace spectra::iga {

double cardinal_bspline(int s, double x) {
    if (s < 0) throw std::invalid_argument("cardinal_bspline: negative degree");
    if (x <= 0.0 || x >= s + 1.0) return (s == 0 && x == 0.0) ? 1.0 : 0.0;
    // w[j] holds psi_d(x - j); build degrees upward
    std::vector<double> w(s + 1, 0.0);
    for (int j = 0; j <= s; ++j) w[j] = (x - j >= 0.0 && x - j < 1.0) ? 1.0 : 0.0;
    for (int d = 1; d <= s; ++d)
        for (int j = 0; j <= s - d; ++j) {
            const double t = x - j;
            w[j] = (t * w[j] + (d + 1.0 - t) * w[j + 1]) / d;
        }
    return w[0];
}

double cardinal_bspline_d2(int s, double x) {
    if (s < 2) throw std::invalid_argument("cardinal_bspline_d2: degree must be >= 2");
    return cardinal_bspline(s - 2, x) - 2.0 * cardinal_bspline(s - 2, x - 1.0) + cardinal_bspline(s - 2, x - 2.0);
}

std::function<double(double)> frequency_symbol(int eta) {
    if (eta < 1 || eta > 10) throw std::invalid_argument("iga::frequency_symbol: eta out of [1,10]");
    const int s = 2 * eta + 1;
    std::vector<double> g(eta + 1), h(eta + 1);
    for (int k = 1; k <= eta; ++k) {
        g[k] = -cardinal_bspline_d2(s, eta + 1.0 - k);
        h[k] = cardinal_bspline(s, eta + 1.0 - k);
    }
    // zero-sum identity pins g(0) = 0 exactly, mirroring the FD d0 rule
    double gsum = 0.0;
    for (int k = 1; k <= eta; ++k) gsum += g[k];
    g[0] = -2.0 * gsum;
    h[0] = cardinal_bspline(s, eta + 1.0);
    return [g, h, eta](double theta) {
        double gn = g[0], hd = h[0];
        for (int k = 1; k <= eta; ++k) {
            const double c = std::cos(k * theta);
            gn += 2.0 * g[k] * c;
            hd += 2.0 * h[k] * c;
        }
        return gn / hd;
    };
}

BSplineSpace make_space(double a, double b, int n, int eta) {
    if (n < 2) throw std::invalid_argument("iga::make_space: n must be >= 2");
    if (eta < 1) throw std::invalid_argument("iga::make_space: eta must be >= 1");
    if (!(b > a)) throw std::invalid_argument("iga::make_space: b must exceed a");
    BSplineSpace sp;
    sp.eta = eta;
    sp.n = n;
    sp.a = a;
    sp.b = b;
    sp.knots.reserve(n + 2 * eta + 2);
    for (int i = 0; i <= eta; ++i) sp.knots.push_back(a);
    for (int j = 1; j <= n; ++j) sp.knots.push_back(a + (b - a) * j / (n + 1));
    for (int i = 0; i <= eta; ++i) sp.knots.push_back(b);
    return sp;
}

namespace {

int find_span(const BSplineSpace& sp, double x) {
    const auto& U = sp.knots;
    const int p = sp.eta;
    const int last = sp.full_dim() - 1;  // highest basis index
    if (x >= U[last + 1]) return last;
    if (x <= U[p]) return p;
    int lo = p, hi = last + 1, mid = (lo + hi) / 2;
    while (x < U[mid] || x >= U[mid + 1]) {
        if (x < U[mid]) hi = mid; else lo = mid;
        mid = (lo + hi) / 2;
    }
    return mid;
}

}  // namespace

BasisEval evaluate_basis(const BSplineSpace& sp, double x) {
    const int p = sp.eta;
    const auto& U = sp.knots;
    BasisEval ev;
    ev.span = find_span(sp, x);
    ev.value.assign(p + 1, 0.0);
    ev.deriv.assign(p + 1, 0.0);

    std::vector<double> left(p + 1), right(p + 1), ndu(p + 1), lower(p);
    ndu[0] = 1.0;
    for (int j = 1; j <= p; ++j) {
        left[j] = x - U[ev.span + 1 - j];
        right[j] = U[ev.span + j] - x;
        if (j == p)
            std::copy(ndu.begin(), ndu.begin() + p, lower.begin());  // degree p-1 row
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            const double denom = right[r + 1] + left[j - r];
            const double temp = denom != 0.0 ? ndu[r] / denom : 0.0;
            ndu[r] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        ndu[j] = saved;
    }
    ev.value = ndu;

    for (int j = 0; j <= p; ++j) {
        const int i = ev.span - p + j;  // basis index
        double lo_term = 0.0, hi_term = 0.0;
        if (j >= 1) {
            const double den = U[i + p] - U[i];
            if (den != 0.0) lo_term = lower[j - 1] / den;
        }
        if (j <= p - 1) {
            const double den = U[i + 1 + p] - U[i + 1];
            if (den != 0.0) hi_term = lower[j] / den;
        }
        ev.deriv[j] = p * (lo_term - hi_term);
    }
    return ev;
}

GalerkinPair assemble_full(const problems::SLProblem& prob, const grids::Diffeomorphism& map, int n, int eta) {
    grids::validate_diffeomorphism(map, prob.a, prob.b);
    const BSplineSpace sp = make_space(prob.a, prob.b, n, eta);
    const int dim = sp.full_dim();
    GalerkinPair pair{BandMatrix(dim, eta), BandMatrix(dim, eta), n, eta};

    const num::GaussRule rule = num::gauss_legendre(eta + 2);
    for (int span = eta; span <= eta + n; ++span) {
        const double xl = sp.knots[span], xr = sp.knots[span + 1];
        if (!(xr > xl)) continue;
        const double mid = 0.5 * (xl + xr), half = 0.5 * (xr - xl);
        for (size_t qp = 0; qp < rule.nodes.size(); ++qp) {
            const double x = mid + half * rule.nodes[qp];
            const double wq = half * rule.weights[qp];
            const double tp = map.tau_prime(x);
            if (tp == 0.0) throw std::runtime_error("iga::assemble: vanishing tau' at a quadrature node");
            const double tx = map.tau(x);
            const double kfac = wq * prob.p(tx) / std::abs(tp);
            const double mfac = wq * prob.w(tx) * std::abs(tp);
            const BasisEval ev = evaluate_basis(sp, x);
            for (int jj = 0; jj <= eta; ++jj) {
                const int j = ev.span - eta + jj;
                for (int ii = 0; ii <= jj; ++ii) {
                    const int i = ev.span - eta + ii;
                    pair.K.at(i, j) += kfac * ev.deriv[ii] * ev.deriv[jj];
                    pair.M.at(i, j) += mfac * ev.value[ii] * ev.value[jj];
                }
            }
        }
    }
    // mirror the computed upper triangle
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j <= std::min(dim - 1, i + eta); ++j) {
            pair.K.at(j, i) = pair.K.get(i, j);
            pair.M.at(j, i) = pair.M.get(i, j);
        }
    return pair;
}

GalerkinPair assemble(const problems::SLProblem& prob, const grids::Diffeomorphism& map, int n, int eta) {
    if (prob.bc.sigma2 != 0.0 || prob.bc.zeta2 != 0.0)
        throw std::invalid_argument("iga::assemble: Dirichlet boundary conditions required");
    for (int i = 1; i <= 5; ++i) {
        const double x = prob.a + (prob.b - prob.a) * i / 6.0;
        if (prob.q(x) != 0.0) throw std::invalid_argument("iga::assemble: reaction term must vanish");
    }
    const GalerkinPair full = assemble_full(prob, map, n, eta);
    const int dim = full.K.size() - 2;
    GalerkinPair pair{BandMatrix(dim, eta), BandMatrix(dim, eta), n, eta};
    for (int i = 0; i < dim; ++i)
        for (int j = std::max(0, i - eta); j <= std::min(dim - 1, i + eta); ++j) {
            pair.K.at(i, j) = full.K.get(i + 1, j + 1);
            pair.M.at(i, j) = full.M.get(i + 1, j + 1);
        }
    return pair;
}

}  // namespace spectra::iga
