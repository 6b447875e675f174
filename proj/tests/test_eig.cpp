#include <stdexcept>
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "spectra/eig.hpp"
#include "test_oracles.hpp"

using namespace spectra;

namespace {

BandMatrix toeplitz_tridiag(int n, double diag, double off) {
    BandMatrix a(n, 1);
    for (int i = 0; i < n; ++i) {
        a.at(i, i) = diag;
        if (i + 1 < n) {
            a.at(i, i + 1) = off;
            a.at(i + 1, i) = off;
        }
    }
    return a;
}

}  // namespace

TEST_CASE("Sturm count is monotone in the shift") {
    oracle::Rng rng(7);
    std::vector<double> d(40), e(39);
    for (auto& v : d) v = rng.uniform() * 3.0;
    for (auto& v : e) v = rng.uniform();
    int prev = 0;
    for (int i = 0; i <= 100; ++i) {
        const double sigma = -6.0 + 12.0 * i / 100.0;
        const int c = eig::sturm_count(d, e, sigma);
        CHECK(c >= prev);
        prev = c;
    }
    CHECK(eig::sturm_count(d, e, -1e3) == 0);
    CHECK(eig::sturm_count(d, e, 1e3) == 40);
}

TEST_CASE("tridiagonal bisection reproduces the Toeplitz spectrum to 1e-12") {
    const int n = 99;
    std::vector<double> d(n, 2.0), e(n - 1, -1.0);
    const std::vector<double> vals = eig::eigvals_tridiag(d, e);
    for (int k = 1; k <= n; ++k)
        CHECK(std::abs(vals[k - 1] - (2.0 - 2.0 * std::cos(k * M_PI / (n + 1)))) < 1e-12);
    // index-range form agrees with the full solve
    const std::vector<double> head = eig::eigvals_tridiag(d, e, 1, 5);
    for (int k = 0; k < 5; ++k) CHECK(head[k] == doctest::Approx(vals[k]).epsilon(1e-13));
}

TEST_CASE("diagonal matrix maps to its sorted diagonal") {
    DenseMatrix a(5, 5);
    const double diag[5] = {3.0, -1.0, 2.5, 0.0, 7.0};
    for (int i = 0; i < 5; ++i) a(i, i) = diag[i];
    const eig::SpectrumResult r = eig::eigvals_sym(a);
    std::vector<double> want(diag, diag + 5);
    std::sort(want.begin(), want.end());
    for (int i = 0; i < 5; ++i) CHECK(std::abs(r.values[i] - want[i]) < 1e-12 * a.norm_inf());
}

TEST_CASE("dense symmetric solver matches the Jacobi oracle") {
    const DenseMatrix a = oracle::random_symmetric(30, 12345);
    const std::vector<double> want = oracle::jacobi_eigenvalues(a);
    const eig::SpectrumResult got = eig::eigvals_sym(a);
    for (int i = 0; i < 30; ++i) CHECK(std::abs(got.values[i] - want[i]) < 1e-9);
}

TEST_CASE("banded and dense symmetric paths agree") {
    const int n = 40, bw = 3;
    oracle::Rng rng(99);
    BandMatrix b(n, bw);
    for (int i = 0; i < n; ++i)
        for (int j = i; j <= std::min(n - 1, i + bw); ++j) {
            const double v = rng.uniform();
            b.at(i, j) = v;
            b.at(j, i) = v;
        }
    const eig::SpectrumResult banded = eig::eigvals_sym(b);
    const eig::SpectrumResult dense = eig::eigvals_sym(b.to_dense());
    for (int i = 0; i < n; ++i) CHECK(banded.values[i] == doctest::Approx(dense.values[i]).epsilon(1e-11));
}

TEST_CASE("eigenvalue sum equals the trace") {
    for (uint64_t seed : {1ull, 2ull, 3ull}) {
        const DenseMatrix a = oracle::random_symmetric(25, seed);
        const eig::SpectrumResult r = eig::eigvals_sym(a);
        double sum = 0.0;
        for (double v : r.values) sum += v;
        CHECK(std::abs(sum - a.trace()) < 1e-9 * 25 * a.norm_inf());
    }
}

TEST_CASE("asymmetric input is rejected") {
    DenseMatrix a(3, 3);
    a(0, 1) = 1.0;
    a(1, 0) = 0.5;
    CHECK_THROWS_AS(eig::eigvals_sym(a), std::invalid_argument);
}

TEST_CASE("generalized solver basics") {
    const int n = 12;
    BandMatrix k = toeplitz_tridiag(n, 2.0, -1.0);
    BandMatrix ident(n, 1);
    for (int i = 0; i < n; ++i) ident.at(i, i) = 1.0;

    SUBCASE("M = identity reduces to the standard problem") {
        const eig::SpectrumResult gen = eig::eigvals_gen_sym(k, ident);
        const eig::SpectrumResult std_ = eig::eigvals_sym(k);
        for (int i = 0; i < n; ++i) CHECK(gen.values[i] == doctest::Approx(std_.values[i]).epsilon(1e-12));
    }
    SUBCASE("K = M gives the constant spectrum 1") {
        BandMatrix m = toeplitz_tridiag(n, 2.0, 0.3);  // SPD by diagonal dominance
        const eig::SpectrumResult r = eig::eigvals_gen_sym(m, m);
        for (double v : r.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("non-SPD mass is reported") {
        BandMatrix m = toeplitz_tridiag(n, 0.1, 1.0);
        CHECK_THROWS_AS(eig::eigvals_gen_sym(k, m), std::runtime_error);
    }
}

TEST_CASE("eta=1 FEM pair on [0,1] approximates pi^2") {
    // stiffness/mass of hat functions, n interior nodes
    const int n = 40;
    const double h = 1.0 / (n + 1);
    BandMatrix k = toeplitz_tridiag(n, 2.0 / h, -1.0 / h);
    BandMatrix m = toeplitz_tridiag(n, 4.0 * h / 6.0, h / 6.0);
    const eig::SpectrumResult r = eig::eigvals_gen_sym(k, m);
    CHECK(std::abs(r.values[0] / (M_PI * M_PI) - 1.0) < 1e-3);
}

TEST_CASE("general solver on symmetric input matches the symmetric path") {
    const DenseMatrix a = oracle::random_symmetric(20, 777);
    const eig::SpectrumResult gen = eig::eigvals_general(a);
    const eig::SpectrumResult sym = eig::eigvals_sym(a);
    for (int i = 0; i < 20; ++i) {
        CHECK(std::abs(gen.values[i] - sym.values[i]) < 1e-9 * std::max(1.0, a.norm_inf()));
        CHECK(std::abs(gen.imag[i]) < 1e-12);
    }
}

TEST_CASE("cross-solver agreement on random symmetric matrices") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        const DenseMatrix a = oracle::random_symmetric(50, seed * 1013);
        const eig::SpectrumResult gen = eig::eigvals_general(a);
        const eig::SpectrumResult sym = eig::eigvals_sym(a);
        for (int i = 0; i < 50; ++i) CHECK(std::abs(gen.values[i] - sym.values[i]) < 1e-8);
    }
}

TEST_CASE("rotation matrix has eigenvalues +-i") {
    DenseMatrix a(2, 2);
    a(0, 1) = 1.0;
    a(1, 0) = -1.0;
    const eig::SpectrumResult r = eig::eigvals_general(a);
    CHECK(r.values[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(r.values[1] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::abs(r.imag[0]) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(r.imag[1]) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.imag[0] * r.imag[1] < 0.0);
}

TEST_CASE("general solver on companion matrices with known roots") {
    // p(z) = prod (z - r_i) with real and complex-conjugate roots; the
    // companion matrix has exactly those eigenvalues
    struct Root {
        double re, im;
    };
    const std::vector<Root> roots = {{1, 0}, {2, 0}, {-4, 0}, {5, 2}, {5, -2}, {-1, 3}, {-1, -3}, {0.5, 0}};
    const int n = static_cast<int>(roots.size());
    // expand the polynomial with complex coefficient recursion (imaginary
    // parts cancel at the end)
    std::vector<double> cr = {1.0}, ci = {0.0};
    for (const Root& r : roots) {
        std::vector<double> nr(cr.size() + 1, 0.0), ni(cr.size() + 1, 0.0);
        for (size_t i = 0; i < cr.size(); ++i) {
            nr[i + 1] += cr[i];
            ni[i + 1] += ci[i];
            nr[i] -= cr[i] * r.re - ci[i] * r.im;
            ni[i] -= cr[i] * r.im + ci[i] * r.re;
        }
        cr = nr;
        ci = ni;
    }
    for (double v : ci) CHECK(std::abs(v) < 1e-10);
    // companion matrix of z^n + a_{n-1} z^{n-1} + ... + a_0
    DenseMatrix a(n, n);
    for (int i = 0; i < n; ++i) a(0, i) = -cr[n - 1 - i] / cr[n];
    for (int i = 1; i < n; ++i) a(i, i - 1) = 1.0;
    const eig::SpectrumResult got = eig::eigvals_general(a);
    std::vector<Root> want(roots);
    std::sort(want.begin(), want.end(), [](const Root& x, const Root& y) {
        return x.re != y.re ? x.re < y.re : x.im < y.im;
    });
    for (int i = 0; i < n; ++i) {
        CHECK(std::abs(got.values[i] - want[i].re) < 1e-8);
        CHECK(std::abs(std::abs(got.imag[i]) - std::abs(want[i].im)) < 1e-8);
    }
}

TEST_CASE("general solver trace identity on nonsymmetric input") {
    oracle::Rng rng(4242);
    DenseMatrix a(30, 30);
    for (int i = 0; i < 30; ++i)
        for (int j = 0; j < 30; ++j) a(i, j) = rng.uniform();
    const eig::SpectrumResult r = eig::eigvals_general(a);
    double re = 0.0, im = 0.0;
    for (int i = 0; i < 30; ++i) {
        re += r.values[i];
        im += r.imag[i];
    }
    CHECK(std::abs(re - a.trace()) < 1e-9 * 30 * a.norm_inf());
    CHECK(std::abs(im) < 1e-10 * a.norm_inf());
}

TEST_CASE("SPD input stays nonnegative") {
    // Gram matrix of random vectors
    oracle::Rng rng(31);
    DenseMatrix b(20, 20);
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) b(i, j) = rng.uniform();
    DenseMatrix g(20, 20);
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
            double s = 0.0;
            for (int k = 0; k < 20; ++k) s += b(k, i) * b(k, j);
            g(i, j) = s;
        }
    const eig::SpectrumResult r = eig::eigvals_sym(g);
    for (double v : r.values) CHECK(v > -1e-10 * g.norm_inf());
}
