#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "spectra/eig.hpp"
#include "spectra/fd.hpp"
#include "spectra/grids.hpp"
#include "spectra/problems.hpp"
#include "test_oracles.hpp"

using namespace spectra;

TEST_CASE("stencil coefficients") {
    SUBCASE("classical 3-point stencil") {
        const fd::Coefficients c = fd::coefficients(1);
        CHECK(c.d[0] == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(c.d[1] == doctest::Approx(-1.0).epsilon(1e-15));
    }
    SUBCASE("5-point stencil against the exact rational oracle") {
        const fd::Coefficients c = fd::coefficients(2);
        CHECK(c.d[0] == doctest::Approx(2.5).epsilon(1e-15));
        CHECK(c.d[1] == doctest::Approx(-4.0 / 3.0).epsilon(1e-15));
        CHECK(c.d[2] == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    }
    SUBCASE("integer-arithmetic oracle up to eta = 15") {
        for (int eta : {3, 5, 8, 12, 15}) {
            const fd::Coefficients c = fd::coefficients(eta);
            for (int k = 0; k <= eta; ++k)
                CHECK(c.d[k] == doctest::Approx(oracle::fd_coefficient_exact(eta, k)).epsilon(1e-13));
        }
    }
    SUBCASE("zero-sum identity and alternating signs") {
        for (int eta = 1; eta <= 20; ++eta) {
            const fd::Coefficients c = fd::coefficients(eta);
            double s = c.d[0];
            for (int k = 1; k <= eta; ++k) s += 2.0 * c.d[k];
            CHECK(std::abs(s) < 1e-12);
            for (int k = 1; k <= eta; ++k) CHECK(c.d[k] * ((k % 2) ? -1.0 : 1.0) > 0.0);
        }
        const fd::Coefficients c15 = fd::coefficients(15);
        CHECK(std::abs(c15.d[1] + 2.0 * (15.0 / 16.0)) < 1e-12);
    }
    CHECK_THROWS_AS(fd::coefficients(0), std::invalid_argument);
    CHECK_THROWS_AS(fd::coefficients(21), std::invalid_argument);
}

TEST_CASE("frequency symbol") {
    const auto f1 = fd::frequency_symbol(1);
    CHECK(f1(M_PI) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(f1(0.0) == doctest::Approx(0.0));
    const auto f2 = fd::frequency_symbol(2);
    CHECK(f2(M_PI) == doctest::Approx(16.0 / 3.0).epsilon(1e-14));

    SUBCASE("f ~ theta^2 near zero") {
        for (int eta = 1; eta <= 15; ++eta) {
            const auto f = fd::frequency_symbol(eta);
            CHECK(std::abs(f(1e-3) / 1e-6 - 1.0) < 1e-4);
        }
    }
    SUBCASE("nonnegative and nondecreasing on [0,pi]") {
        for (int eta = 1; eta <= 15; ++eta) {
            const auto f = fd::frequency_symbol(eta);
            double prev = -1e-14;
            for (int i = 0; i <= 10000; ++i) {
                const double v = f(M_PI * i / 10000.0);
                CHECK(v >= -1e-12);
                CHECK(v >= prev - 1e-10);
                prev = v;
            }
        }
    }
    SUBCASE("sup |f_eta - theta^2| decreases with the order") {
        double prev = 1e300;
        for (int eta = 1; eta <= 8; ++eta) {
            const auto f = fd::frequency_symbol(eta);
            double sup = 0.0;
            for (int i = 0; i <= 4000; ++i) {
                const double th = M_PI * i / 4000.0;
                sup = std::max(sup, std::abs(f(th) - th * th));
            }
            CHECK(sup < prev);
            prev = sup;
        }
    }
}

TEST_CASE("assembly reduces to the Toeplitz form for constant coefficients") {
    for (int eta : {1, 2, 3, 5}) {
        const int n = 4 * eta;
        const problems::SLProblem prob = problems::dirichlet_laplacian(0.0, 2.0);
        const fd::System sys = fd::assemble(prob, grids::identity_map(), n, eta);
        const fd::Coefficients c = fd::coefficients(eta);
        const double scale = (n + 1.0) * (n + 1.0) / 4.0;  // (n+1)^2/(b-a)^2
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double want = std::abs(i - j) <= eta ? scale * c.d[std::abs(i - j)] : 0.0;
                worst = std::max(worst, std::abs(sys.L.get(i, j) - want) / scale);
            }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("3-point assembly matches the hand formula") {
    const double alpha = 0.7;
    const problems::SLProblem prob = problems::euler_cauchy(alpha);
    const int n = 3;
    const fd::System sys = fd::assemble(prob, grids::identity_map(), n, 1);
    const double h = (prob.b - prob.a) / (n + 1);
    for (int i = 1; i <= n; ++i) {
        const double xi = prob.a + h * i;
        if (i < n) CHECK(sys.L.get(i - 1, i) == doctest::Approx(-prob.p(xi + 0.5 * h) / (h * h)).epsilon(1e-12));
        if (i > 1) CHECK(sys.L.get(i - 1, i - 2) == doctest::Approx(-prob.p(xi - 0.5 * h) / (h * h)).epsilon(1e-12));
        CHECK(sys.L.get(i - 1, i - 1) ==
              doctest::Approx((prob.p(xi - 0.5 * h) + prob.p(xi + 0.5 * h)) / (h * h)).epsilon(1e-12));
    }
}

TEST_CASE("interior row sums vanish") {
    const problems::SLProblem prob = problems::euler_cauchy(1.3);
    const fd::System sys = fd::assemble(prob, grids::exp_map(1.3), 24, 3);
    for (int i = 3; i < 24 - 3; ++i) {
        double row = 0.0, l1 = 0.0;
        for (int j = std::max(0, i - 3); j <= std::min(23, i + 3); ++j) {
            row += sys.L.get(i, j);
            l1 += std::abs(sys.L.get(i, j));
        }
        CHECK(std::abs(row) < 1e-8 * l1);
    }
}

TEST_CASE("weighted Laplacian spectrum equals the sampled symbol") {
    const int n = 40;
    const problems::SLProblem prob = problems::dirichlet_laplacian(0.0, 1.0);
    const fd::System sys = fd::assemble(prob, grids::identity_map(), n, 1);
    const fd::Operator op = fd::to_operator(sys);
    CHECK(op.symmetric);
    const eig::SpectrumResult r = eig::eigvals_sym(op.A);
    const double wt = (n + 1.0) * (n + 1.0);
    for (int k = 1; k <= n; ++k)
        CHECK(r.values[k - 1] / wt == doctest::Approx(2.0 - 2.0 * std::cos(k * M_PI / (n + 1))).epsilon(1e-10));
}

TEST_CASE("operator forms and the symmetry flag") {
    SUBCASE("w = 1 gives L + Q exactly") {
        const problems::SLProblem prob = problems::euler_cauchy(1.0);
        const fd::System sys = fd::assemble(prob, grids::identity_map(), 10, 2);
        const fd::Operator op = fd::to_operator(sys);
        CHECK(op.symmetric);
        for (int i = 0; i < 10; ++i)
            for (int j = std::max(0, i - 2); j <= std::min(9, i + 2); ++j)
                CHECK(op.A.get(i, j) == doctest::Approx(sys.L.get(i, j)).epsilon(1e-14));
    }
    SUBCASE("uniform grids stay symmetric for variable p") {
        const fd::System sys = fd::assemble(problems::euler_cauchy(2.0), grids::identity_map(), 20, 3);
        CHECK(sys.L.is_symmetric(1e-12));
    }
    SUBCASE("symmetrized and general forms are similar") {
        // exp-grid 3-point scheme: W = I but L is nonsymmetric; the
        // sign-symmetric tridiagonal route must agree with plain QR
        const fd::System sys = fd::assemble(problems::euler_cauchy(1.0), grids::exp_map(1.0), 50, 1);
        const fd::Operator op = fd::to_operator(sys);
        CHECK_FALSE(op.symmetric);
        const eig::SpectrumResult fast = eig::eigvals_general(op.A);      // similarity + Sturm
        const eig::SpectrumResult qr = eig::eigvals_general(op.A.to_dense());
        for (int k = 0; k < 50; ++k)
            CHECK(std::abs(fast.values[k] / qr.values[k] - 1.0) < 1e-9);
    }
}

TEST_CASE("computed spectra are real on the non-uniform grid") {
    const fd::System sys = fd::assemble(problems::euler_cauchy(1.0), grids::exp_map(1.0), 60, 2);
    const fd::Operator op = fd::to_operator(sys);
    CHECK_FALSE(op.symmetric);
    const eig::SpectrumResult r = eig::eigvals_general(op.A);
    CHECK(r.essentially_real(1e-8 * op.A.norm_inf()));
}

TEST_CASE("fixed-k eigenvalues converge at order two for eta = 1") {
    const problems::SLProblem prob = problems::euler_cauchy(1.0);
    const double exact = M_PI * M_PI + 0.25;
    auto lambda1 = [&prob](int n) {
        const fd::Operator op = fd::to_operator(fd::assemble(prob, grids::identity_map(), n, 1));
        return eig::eigvals_sym(op.A).values[0];
    };
    const double e200 = std::abs(lambda1(200) / exact - 1.0);
    const double e400 = std::abs(lambda1(400) / exact - 1.0);
    CHECK(e200 / e400 > 3.5);
    CHECK(e200 / e400 < 4.5);
}

TEST_CASE("assembly rejects undersized grids") {
    CHECK_THROWS_AS(fd::assemble(problems::euler_cauchy(1.0), grids::identity_map(), 3, 2), std::invalid_argument);
}
