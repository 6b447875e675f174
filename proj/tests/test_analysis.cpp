#include <stdexcept>
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "spectra/analysis.hpp"
#include "spectra/eig.hpp"
#include "spectra/symbol.hpp"
#include "spectra/tables.hpp"

using namespace spectra;

TEST_CASE("relative errors against a reference spectrum") {
    const std::vector<double> ref = {1.0, 4.0, 9.0, 16.0};
    const symbol::MonotoneRearrangement rear({0.0, 1.0}, {0.0, 1.0}, symbol::RearrangeMode::exact, 0);

    SUBCASE("identical spectra give zero numerical error") {
        const analysis::ErrorReport rep = analysis::relative_errors(ref, ref, rear, 4);
        for (double e : rep.numerical_err) CHECK(e == 0.0);
        CHECK(rep.max_err == 0.0);
    }
    SUBCASE("zero reference is rejected") {
        const std::vector<double> bad = {0.0, 1.0, 2.0, 3.0};
        CHECK_THROWS_AS(analysis::relative_errors(ref, bad, rear, 4), std::invalid_argument);
    }
}

TEST_CASE("saturation constant closed form") {
    CHECK(analysis::saturation_constant(4.0 * M_PI * M_PI, 1) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(analysis::saturation_constant(4.0 * M_PI * M_PI, 2) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(analysis::saturation_constant(1.0, 10) == doctest::Approx(2.5324e-4).epsilon(1e-4));
    CHECK(analysis::saturation_constant(1e-12, 1) < 1e-12);
}

TEST_CASE("analytic error saturates at c_{alpha,k}") {
    // convergence of the exact-rearrangement analytic error to the closed form
    CHECK(tables::saturation_deviation(1.0, 1, 1000) < 0.05);
    const double r12 = tables::saturation_deviation(1.0, 1, 100) / tables::saturation_deviation(1.0, 1, 1000);
    CHECK(r12 > 50.0);
    CHECK(r12 < 200.0);
}

TEST_CASE("necessary-condition gap") {
    SUBCASE("the Weyl curve itself has zero gap") {
        const analysis::GapReport rep = analysis::necessary_condition_gap(
            [](double x) { return x * x * M_PI * M_PI; }, 1.0, 500);
        CHECK(rep.gap < 1e-13);
    }
    SUBCASE("FD eta=1 against the exact curve reproduces the published check") {
        const tables::NecCondCheck c = tables::necessary_condition_check(1.0, 1000);
        CHECK(c.agreement == doctest::Approx(0.0016).epsilon(0.05));
        CHECK(c.argmax_ratio == doctest::Approx(0.668).epsilon(0.002));
        CHECK(c.max_err == doctest::Approx(0.3201).epsilon(0.005));
    }
}

TEST_CASE("max relative error with outlier exclusion") {
    const std::vector<double> ref = {1.0, 2.0, 3.0, 4.0};
    const std::vector<double> disc = {1.1, 2.0, 3.0, 40.0};
    const analysis::MaxRelErr plain = analysis::max_relative_error(disc, ref, false, nullptr, 1.0);
    CHECK(plain.value == doctest::Approx(9.0));
    CHECK(plain.argmax_k == 4);

    symbol::SeparableSymbol sym;
    sym.amp = [](double) { return 1.0; };
    sym.freq = [](double th) { return th; };  // range [0, pi]
    sym.xa = 0.0;
    sym.xb = 1.0;
    const analysis::MaxRelErr excl = analysis::max_relative_error(disc, ref, true, &sym, 1.0);
    CHECK(excl.outliers_excluded == 1);
    CHECK(excl.value == doctest::Approx(0.1));
    CHECK(excl.argmax_k == 1);
}

TEST_CASE("discrete Weyl-law consistency") {
    const int n = 1000;
    const std::vector<double> lam = tables::fd_euler_spectrum(1.0, n, 1, false);
    std::vector<double> weighted(lam);
    for (double& v : weighted) v /= (n + 1.0) * (n + 1.0);
    for (double x : {0.25, 0.5, 0.75}) {
        const double t = symbol::euler_cauchy_omega_tilde(1.0, x);
        CHECK(std::abs(symbol::counting_function(weighted, t) - x) < 0.02);
    }
}

TEST_CASE("uniform sampling absolute error decays") {
    // max_k |omega_tilde(k/(n+1)) - weighted lambda_k| decreasing in n
    double prev = 1e300;
    for (int n : {100, 200, 400, 800}) {
        const std::vector<double> lam = tables::fd_euler_spectrum(1.0, n, 1, false);
        const double wt = (n + 1.0) * (n + 1.0);
        double sup = 0.0;
        for (int k = 1; k <= n; ++k)
            sup = std::max(sup, std::abs(symbol::euler_cauchy_omega_tilde(1.0, k / (n + 1.0)) - lam[k - 1] / wt));
        CHECK(sup < prev);
        prev = sup;
    }
    CHECK(prev < 0.05);
}

TEST_CASE("L1 coefficient statistics") {
    const analysis::L1Stats st = analysis::l1_case_stats(1000, 1000);
    CHECK(st.sup_abs_err == doctest::Approx(37.0283).epsilon(0.01));
    CHECK(st.max_analytic_rel_err == doctest::Approx(0.4136).epsilon(0.01));
    CHECK(st.tail_ratio == doctest::Approx(4.0).epsilon(0.0025));
    CHECK(st.eig_ratio == doctest::Approx(2.8296).epsilon(0.001));
    CHECK(st.mean_eig == doctest::Approx(3.92).epsilon(0.005));
    CHECK_THROWS_AS(analysis::l1_case_stats(5, 100), std::invalid_argument);
}

TEST_CASE("L1 tail growth of the sampled rearrangement") {
    const int n = 2000;
    const symbol::MonotoneRearrangement rear = symbol::rearrange(symbol::l1_symbol(), n);
    const double ratio = rear(static_cast<double>(n) / (n + 1)) / std::sqrt(n + 1.0);
    CHECK(ratio > 3.8);
    CHECK(ratio < 4.2);
}

TEST_CASE("L1 interior tracking") {
    // away from the singular end the sampled rearrangement tracks the
    // weighted spectrum (compact-subset form of the absolute-error law)
    const int n = 400;
    const symbol::MonotoneRearrangement rear = symbol::rearrange(symbol::l1_symbol(), n);
    const std::vector<double> lam = [] {
        const int m = 400;
        std::vector<double> d(m), e(m - 1);
        const double h = 1.0 / (m + 1);
        auto p = [](double x) { return 1.0 / std::sqrt(x); };
        for (int i = 1; i <= m; ++i) {
            const double xi = i * h;
            d[i - 1] = (p(xi - 0.5 * h) + p(xi + 0.5 * h)) / (h * h);
            if (i < m) e[i - 1] = -p(xi + 0.5 * h) / (h * h);
        }
        return eig::eigvals_tridiag(d, e);
    }();
    const double wt = (n + 1.0) * (n + 1.0);
    for (int k = n / 4; k <= n / 2; ++k)
        CHECK(std::abs(rear(k / (n + 1.0)) / (lam[k - 1] / wt) - 1.0) < 0.05);
}

TEST_CASE("2-D Laplacian gap") {
    const analysis::Laplace2DReport rep = analysis::laplace2d_gap(8);
    CHECK(rep.bound == doctest::Approx(1.0 - 4.0 / (M_PI * M_PI)).epsilon(1e-15));

    // brute-force oracle: direct enumeration over all (i,j) pairs
    std::vector<double> disc, cont;
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            disc.push_back(81.0 * (4.0 - 2.0 * std::cos(i * M_PI / 9.0) - 2.0 * std::cos(j * M_PI / 9.0)));
            cont.push_back(M_PI * M_PI * (i * i + j * j));
        }
    std::sort(disc.begin(), disc.end());
    std::sort(cont.begin(), cont.end());
    double want = 0.0;
    for (size_t k = 0; k < disc.size(); ++k) want = std::max(want, std::abs(disc[k] / cont[k] - 1.0));
    CHECK(rep.max_rel_err == doctest::Approx(want).epsilon(1e-14));

    const analysis::Laplace2DReport big = analysis::laplace2d_gap(64);
    CHECK(big.max_rel_err >= 0.55);
    CHECK(big.max_rel_err <= big.bound);
    CHECK_THROWS_AS(analysis::laplace2d_gap(500), std::invalid_argument);
}
