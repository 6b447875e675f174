#include "spectra/fd.hpp"

#include <cmath>
#include <stdexcept>

namespace spectra::fd {

Coefficients coefficients(int eta) {
    if (eta < 1 || eta > 20) throw std::invalid_argument("fd::coefficients: eta out of [1,20]");
    Coefficients c;
    c.eta = eta;
    c.d.assign(eta + 1, 0.0);
    double sum = 0.0;
    for (int k = 1; k <= eta; ++k) {
        // (-1)^k eta! eta! / ((eta-k)! (eta+k)!) * 2/k^2 as a running product
        double ratio = 1.0;
        for (int j = 1; j <= k; ++j) ratio *= static_cast<double>(eta - j + 1) / (eta + j);
        const double dk = ((k % 2) ? -1.0 : 1.0) * ratio * 2.0 / (static_cast<double>(k) * k);
        c.d[k] = dk;
        sum += dk;
    }
    c.d[0] = -2.0 * sum;
    return c;
}

std::function<double(double)> frequency_symbol(int eta) {
    const Coefficients c = coefficients(eta);
    return [c](double theta) {
        double s = c.d[0];
        for (int k = 1; k <= c.eta; ++k) s += 2.0 * c.d[k] * std::cos(k * theta);
        return s;
    };
}

namespace {

/// Off-diagonal stencil entry l_{i,j} on the extended grid (1-based rows).
double stencil_entry(const grids::ExtendedGrid& g, const problems::ScalarField& p_bar, int i, int j, int eta) {
    const double xi = g.node(i), xj = g.node(j);
    double numer = 0.0;
    for (int m = i - eta; m <= i + eta; ++m) {
        if (m == i || m == j) continue;
        double prod = 1.0;
        for (int k = i - eta; k <= i + eta; ++k) {
            if (k == i || k == j || k == m) continue;
            prod *= g.node(k) - xi;
        }
        numer += prod;
    }
    double denom = xj - xi;
    for (int k = i - eta; k <= i + eta; ++k) {
        if (k == i || k == j) continue;
        denom *= g.node(k) - xj;
    }
    return 2.0 * p_bar(0.5 * (xj + xi)) * numer / denom;
}

}  // namespace

System assemble(const problems::SLProblem& prob, const grids::Diffeomorphism& map, int n, int eta) {
    if (n < 2 * eta) throw std::invalid_argument("fd::assemble: n must be >= 2 eta");
    const grids::ExtendedGrid grid = grids::mapped_grid(grids::uniform_grid(prob.a, prob.b, n, eta), map);

    const double a = prob.a, b = prob.b;
    const auto& p = prob.p;
    const problems::ScalarField p_bar = [&p, a, b](double x) {
        const double xc = x <= a ? a : (x >= b ? b : x);
        const double v = p(xc);
        if (!(v > 0.0)) throw std::runtime_error("fd::assemble: nonpositive diffusion at a stencil midpoint");
        return v;
    };

    System sys{BandMatrix(n, eta), std::vector<double>(n), std::vector<double>(n), grid};
    for (int i = 1; i <= n; ++i) {
        double diag = 0.0;
        for (int j = i - eta; j <= i + eta; ++j) {
            if (j == i) continue;
            const double lij = stencil_entry(grid, p_bar, i, j, eta);
            diag -= lij;  // zero-row-sum over the full stencil, ghosts included
            if (j >= 1 && j <= n) sys.L.at(i - 1, j - 1) = lij;
        }
        sys.L.at(i - 1, i - 1) = diag;
        const double xi = grid.node(i);
        sys.q_diag[i - 1] = prob.q(xi);
        sys.w_diag[i - 1] = prob.w(xi);
        if (!(sys.w_diag[i - 1] > 0.0)) throw std::runtime_error("fd::assemble: nonpositive weight sample");
        if (sys.q_diag[i - 1] < 0.0) throw std::runtime_error("fd::assemble: negative reaction sample");
    }
    return sys;
}

Operator to_operator(const System& sys) {
    const int n = sys.L.size(), bw = sys.L.bandwidth();
    BandMatrix lq = sys.L;
    for (int i = 0; i < n; ++i) lq.at(i, i) += sys.q_diag[i];

    Operator op{BandMatrix(n, bw), lq.is_symmetric(1e-12)};
    if (op.symmetric) {
        for (int i = 0; i < n; ++i) {
            const double si = 1.0 / std::sqrt(sys.w_diag[i]);
            for (int j = std::max(0, i - bw); j <= std::min(n - 1, i + bw); ++j)
                op.A.at(i, j) = si * lq.get(i, j) / std::sqrt(sys.w_diag[j]);
        }
    } else {
        for (int i = 0; i < n; ++i) {
            const double wi = 1.0 / sys.w_diag[i];
            for (int j = std::max(0, i - bw); j <= std::min(n - 1, i + bw); ++j)
                op.A.at(i, j) = wi * lq.get(i, j);
        }
    }
    return op;
}

}  // namespace spectra::fd
