#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace spectra::problems {

using ScalarField = std::function<double(double)>;

/// Separated boundary-condition coefficients:
///   sigma1 u(a) - sigma2 p(a) u'(a) = 0,  zeta1 u(b) + zeta2 p(b) u'(b) = 0.
struct BoundaryCoeffs {
    double sigma1 = 1.0, sigma2 = 0.0;
    double zeta1 = 1.0, zeta2 = 0.0;
};

/// Closed-form reference spectra for the problems the experiments use.
class ExactSpectrum {
public:
    enum class Kind { euler_cauchy, dirichlet_laplacian_1d, dirichlet_laplacian_2d };

    static ExactSpectrum euler_cauchy(double alpha);
    static ExactSpectrum dirichlet_laplacian_1d(double interval_length);
    static ExactSpectrum dirichlet_laplacian_2d();

    Kind kind() const { return kind_; }
    /// k-th eigenvalue, 1-based; strictly increasing in k.
    double operator()(int k) const;

private:
    Kind kind_;
    double param_ = 0.0;
    mutable std::vector<double> cache2d_;
};

/// Regular weighted Sturm-Liouville problem -(p u')' + q u = lambda w u on (a,b).
struct SLProblem {
    double a = 0.0, b = 1.0;
    ScalarField p, p_prime, q, w;
    BoundaryCoeffs bc;
    std::optional<ExactSpectrum> exact;
    std::string label;
};

/// -(alpha x^2 u')' = lambda u on (1, e^sqrt(alpha)), Dirichlet.
/// Exact spectrum k^2 pi^2 + alpha/4. Rejects alpha <= 0.
SLProblem euler_cauchy(double alpha);

/// -u'' = lambda u on (a,b), Dirichlet. Exact spectrum k^2 pi^2 / (b-a)^2.
SLProblem dirichlet_laplacian(double a, double b);

/// -(x^{-1/2} u')' = lambda u on (0,1), Dirichlet; the L^1-coefficient case.
/// No exact spectrum; only the 3-point FD scheme touches it.
SLProblem l1_problem();

/// Liouville normal form data: -v'' + V v = lambda v on (0,B).
struct NormalForm {
    double B = 0.0;
    ScalarField V;
    double Sigma1 = 0.0, Sigma2 = 0.0;
    double Z1 = 0.0, Z2 = 0.0;
};

/// Liouville transform of a regular SLProblem. B by adaptive quadrature to
/// relative tolerance 1e-12; V evaluated through the inverse coordinate map
/// (bisection to 1e-13) with a 5-point stencil for the second derivative.
NormalForm liouville_transform(const SLProblem& prob);

/// pi^2 / B^2, the Weyl limit of lambda_n / n^2.
double weyl_constant(const SLProblem& prob);

/// First k_max reference eigenvalues from the attached exact spectrum.
/// Throws std::invalid_argument when the problem has none.
std::vector<double> reference_spectrum(const SLProblem& prob, int k_max);

/// First k_max reference eigenvalues from a fine uniform-grid FD solve of
/// size n_fine (requires n_fine >= 10 k_max).
std::vector<double> reference_spectrum_fine_fd(const SLProblem& prob, int k_max, int n_fine, int eta);

}  // namespace spectra::problems
