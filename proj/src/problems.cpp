#include "spectra/problems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spectra/eig.hpp"
#include "spectra/fd.hpp"
#include "spectra/grids.hpp"
#include "spectra/numerics.hpp"

namespace spectra::problems {

ExactSpectrum ExactSpectrum::euler_cauchy(double alpha) {
    ExactSpectrum s;
    s.kind_ = Kind::euler_cauchy;
    s.param_ = alpha;
    return s;
}

ExactSpectrum ExactSpectrum::dirichlet_laplacian_1d(double interval_length) {
    ExactSpectrum s;
    s.kind_ = Kind::dirichlet_laplacian_1d;
    s.param_ = interval_length;
    return s;
}

ExactSpectrum ExactSpectrum::dirichlet_laplacian_2d() {
    ExactSpectrum s;
    s.kind_ = Kind::dirichlet_laplacian_2d;
    return s;
}

double ExactSpectrum::operator()(int k) const {
    if (k < 1) throw std::invalid_argument("ExactSpectrum: k must be >= 1");
    const double pi2 = M_PI * M_PI;
    switch (kind_) {
        case Kind::euler_cauchy:
            return static_cast<double>(k) * k * pi2 + 0.25 * param_;
        case Kind::dirichlet_laplacian_1d:
            return static_cast<double>(k) * k * pi2 / (param_ * param_);
        case Kind::dirichlet_laplacian_2d: {
            if (static_cast<int>(cache2d_.size()) < k) {
                // enumerate pi^2 (i^2 + j^2); a 4k x 4k index box safely covers
                // the first k sorted values
                const int m = std::max(16, static_cast<int>(4 * std::sqrt(static_cast<double>(k))) + 4);
                cache2d_.clear();
                for (int i = 1; i <= m; ++i)
                    for (int j = 1; j <= m; ++j) cache2d_.push_back(pi2 * (static_cast<double>(i) * i + static_cast<double>(j) * j));
                std::sort(cache2d_.begin(), cache2d_.end());
            }
            return cache2d_[static_cast<size_t>(k) - 1];
        }
    }
    throw std::logic_error("ExactSpectrum: unknown kind");
}

SLProblem euler_cauchy(double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("euler_cauchy: alpha must be positive");
    SLProblem prob;
    prob.a = 1.0;
    prob.b = std::exp(std::sqrt(alpha));
    prob.p = [alpha](double x) { return alpha * x * x; };
    prob.p_prime = [alpha](double x) { return 2.0 * alpha * x; };
    prob.q = [](double) { return 0.0; };
    prob.w = [](double) { return 1.0; };
    prob.bc = {1.0, 0.0, 1.0, 0.0};
    prob.exact = ExactSpectrum::euler_cauchy(alpha);
    prob.label = "euler-cauchy";
    return prob;
}

SLProblem dirichlet_laplacian(double a, double b) {
    if (!(b > a)) throw std::invalid_argument("dirichlet_laplacian: b must exceed a");
    SLProblem prob;
    prob.a = a;
    prob.b = b;
    prob.p = [](double) { return 1.0; };
    prob.p_prime = [](double) { return 0.0; };
    prob.q = [](double) { return 0.0; };
    prob.w = [](double) { return 1.0; };
    prob.bc = {1.0, 0.0, 1.0, 0.0};
    prob.exact = ExactSpectrum::dirichlet_laplacian_1d(b - a);
    prob.label = "laplacian-1d";
    return prob;
}

SLProblem l1_problem() {
    SLProblem prob;
    prob.a = 0.0;
    prob.b = 1.0;
    prob.p = [](double x) { return 1.0 / std::sqrt(x); };
    prob.p_prime = [](double x) { return -0.5 * std::pow(x, -1.5); };
    prob.q = [](double) { return 0.0; };
    prob.w = [](double) { return 1.0; };
    prob.bc = {1.0, 0.0, 1.0, 0.0};
    prob.label = "l1-case";
    return prob;
}

namespace {

/// y(x) = int_a^x sqrt(w/p); strictly increasing coordinate of the transform.
double liouville_coordinate(const SLProblem& prob, double x) {
    if (x <= prob.a) return 0.0;
    return num::adaptive_simpson(
        [&prob](double t) {
            const double pv = prob.p(t), wv = prob.w(t);
            if (!(pv > 0.0) || !(wv > 0.0))
                throw std::runtime_error("liouville_transform: nonpositive p or w at a quadrature node");
            return std::sqrt(wv / pv);
        },
        prob.a, x, 1e-12);
}

/// One-sided 4-point derivative of f at x0 stepping into the interval.
double one_sided_derivative(const ScalarField& f, double x0, double h) {
    return (-11.0 * f(x0) + 18.0 * f(x0 + h) - 9.0 * f(x0 + 2 * h) + 2.0 * f(x0 + 3 * h)) / (6.0 * h);
}

}  // namespace

NormalForm liouville_transform(const SLProblem& prob) {
    NormalForm nf;
    nf.B = liouville_coordinate(prob, prob.b);
    if (!(nf.B > 0.0)) throw std::runtime_error("liouville_transform: nonpositive transformed length");

    const double a = prob.a, b = prob.b, B = nf.B;
    const auto p = prob.p, q = prob.q, w = prob.w;

    // inverse map x(y): bisection bracket, then Newton polish with the known
    // derivative y'(x) = sqrt(w/p) down to machine precision (the second
    // difference below amplifies any x error by h^-2). The problem is copied
    // into the closure: NormalForm::V may outlive the argument.
    auto x_of_y = [held = prob, a, b, B](double y) {
        if (y <= 0.0) return a;
        if (y >= B) return b;
        double x = num::bisect_root([&held, y](double x0) { return liouville_coordinate(held, x0) - y; }, a, b,
                                    1e-10 * (b - a));
        for (int it = 0; it < 8; ++it) {
            const double f = liouville_coordinate(held, x) - y;
            const double slope = std::sqrt(held.w(x) / held.p(x));
            const double step = f / slope;
            x = std::clamp(x - step, a, b);
            if (std::abs(step) < 1e-15 * (b - a)) break;
        }
        return x;
    };
    auto g = [p, w, x_of_y](double y) {
        const double x = x_of_y(y);
        return std::pow(w(x) * p(x), 0.25);
    };
    const double h = 4e-3 * B;
    nf.V = [g, q, w, x_of_y, h, B](double y) {
        if (y - 2 * h < 0.0 || y + 2 * h > B)
            throw std::invalid_argument("NormalForm::V: stencil leaves (0,B)");
        const double g2 = (-g(y - 2 * h) + 16.0 * g(y - h) - 30.0 * g(y) + 16.0 * g(y + h) - g(y + 2 * h)) / (12.0 * h * h);
        const double x = x_of_y(y);
        return g2 / g(y) + q(x) / w(x);
    };

    // transformed boundary coefficients; the (wp)' factors are numeric
    const double wp_a = w(a) * p(a), wp_b = w(b) * p(b);
    const double step = 1e-5 * (b - a);
    const auto wp = [p, w](double x) { return w(x) * p(x); };
    const double dwp_a = one_sided_derivative(wp, a, step);
    const double dwp_b = -one_sided_derivative([wp, b](double s) { return wp(b - s); }, 0.0, step);
    nf.Sigma1 = prob.bc.sigma1 / std::pow(wp_a, 0.25) +
                prob.bc.sigma2 * dwp_a / (4.0 * std::pow(p(a), 0.25) * std::pow(w(a), 1.25));
    nf.Sigma2 = std::pow(wp_a, 0.25) * prob.bc.sigma2;
    nf.Z1 = prob.bc.zeta1 / std::pow(wp_b, 0.25) -
            prob.bc.zeta2 * dwp_b / (4.0 * std::pow(p(b), 0.25) * std::pow(w(b), 1.25));
    nf.Z2 = std::pow(wp_b, 0.25) * prob.bc.zeta2;
    return nf;
}

double weyl_constant(const SLProblem& prob) {
    const double B = liouville_coordinate(prob, prob.b);
    return M_PI * M_PI / (B * B);
}

std::vector<double> reference_spectrum(const SLProblem& prob, int k_max) {
    if (!prob.exact) throw std::invalid_argument("reference_spectrum: problem has no exact spectrum");
    std::vector<double> out(k_max);
    for (int k = 1; k <= k_max; ++k) out[k - 1] = (*prob.exact)(k);
    return out;
}

std::vector<double> reference_spectrum_fine_fd(const SLProblem& prob, int k_max, int n_fine, int eta) {
    if (n_fine < 10 * k_max) throw std::invalid_argument("reference_spectrum_fine_fd: n_fine must be >= 10 k_max");
    const fd::System sys = fd::assemble(prob, grids::identity_map(), n_fine, eta);
    const fd::Operator op = fd::to_operator(sys);
    if (op.symmetric && op.A.bandwidth() <= 1) {
        std::vector<double> d(n_fine), e(n_fine - 1);
        for (int i = 0; i < n_fine; ++i) d[i] = op.A.get(i, i);
        for (int i = 0; i + 1 < n_fine; ++i) e[i] = op.A.get(i, i + 1);
        return eig::eigvals_tridiag(d, e, 1, k_max);
    }
    eig::SpectrumResult r = op.symmetric ? eig::eigvals_sym(op.A) : eig::eigvals_general(op.A);
    r.values.resize(k_max);
    return r.values;
}

}  // namespace spectra::problems
