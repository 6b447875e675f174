#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "spectra/numerics.hpp"

using namespace spectra;

TEST_CASE("adaptive Simpson on smooth integrands") {
    CHECK(num::adaptive_simpson([](double x) { return x * x; }, 0.0, 1.0, 1e-12) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(num::adaptive_simpson([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12) == doctest::Approx(2.0).epsilon(1e-11));
    CHECK(num::adaptive_simpson([](double x) { return 1.0 / x; }, 1.0, std::exp(1.0), 1e-12) == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(num::adaptive_simpson([](double) { return 1.0; }, 2.0, 2.0, 1e-12) == 0.0);
}

TEST_CASE("bisection root finding") {
    const double r = num::bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-14);
    CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(num::bisect_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-10), std::invalid_argument);
}

TEST_CASE("golden-section maximizer") {
    const double x = num::golden_max([](double t) { return -(t - 0.3) * (t - 0.3); }, 0.0, 1.0, 1e-12);
    CHECK(x == doctest::Approx(0.3).epsilon(1e-9));
}

TEST_CASE("Gauss-Legendre rules integrate polynomials of degree 2m-1") {
    for (int m : {1, 2, 3, 5, 8, 12}) {
        const num::GaussRule rule = num::gauss_legendre(m);
        double wsum = 0.0;
        for (double w : rule.weights) wsum += w;
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
        const int p = 2 * m - 2;  // highest even power integrated exactly
        double quad = 0.0;
        for (int i = 0; i < m; ++i) quad += rule.weights[i] * std::pow(rule.nodes[i], p);
        CHECK(quad == doctest::Approx(2.0 / (p + 1)).epsilon(1e-12));
    }
}
