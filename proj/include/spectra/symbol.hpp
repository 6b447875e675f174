#pragma once

#include <functional>
#include <span>
#include <vector>

#include "spectra/grids.hpp"
#include "spectra/problems.hpp"

namespace spectra::symbol {

/// Separable spectral symbol amp(x) * freq(theta) on [xa,xb] x [0,pi].
/// `unbounded` marks an amplitude blowing up at an interval endpoint
/// (the L^1 coefficient case).
struct SeparableSymbol {
    std::function<double(double)> amp;
    std::function<double(double)> freq;
    double xa = 0.0, xb = 1.0;
    bool unbounded = false;
};

/// Symbol of the FD/IgA discretization of prob on the tau-mapped grid:
/// amp(x) = p(tau(x)) / (w(tau(x)) tau'(x)^2 (b-a)^2) with the given
/// frequency factor.
SeparableSymbol make_symbol(const problems::SLProblem& prob, const grids::Diffeomorphism& map,
                            std::function<double(double)> freq);

/// x^{-1/2} (2 - 2 cos theta) on (0,1] x [0,pi].
SeparableSymbol l1_symbol();

struct Range {
    double lo = 0.0, hi = 0.0;
    bool bounded = true;
};

/// Essential range [min amp * min freq, max amp * max freq] via probe grids
/// refined by golden-section. Unbounded symbols get bounded=false and hi=inf.
Range essential_range(const SeparableSymbol& sym);

/// True iff lambda falls outside the essential range expanded by
/// eps * width (lower end only for unbounded symbols).
bool is_outlier(double lambda, const SeparableSymbol& sym, double eps = 0.01);

enum class RearrangeMode { approx, exact };

/// Piecewise-linear nondecreasing quantile function on [0,1].
class MonotoneRearrangement {
public:
    MonotoneRearrangement(std::vector<double> xs, std::vector<double> vals, RearrangeMode mode, int r);

    double operator()(double x) const;
    /// Distribution function phi(t) = inf { x : omega_tilde(x) >= t }.
    double inverse(double t) const;

    RearrangeMode mode() const { return mode_; }
    int r() const { return r_; }
    const std::vector<double>& breakpoints() const { return xs_; }
    const std::vector<double>& values() const { return vals_; }

private:
    std::vector<double> xs_, vals_;
    RearrangeMode mode_;
    int r_;
};

/// Approximate rearrangement from an r x r equispaced sampling of the symbol
/// (interior nodes x_i = i/(r+1), theta_j = j pi/(r+1)), sorted and
/// interpolated. Bounded symbols get the essential-range endpoints at x=0,1;
/// unbounded symbols interpolate r sample quantiles and extend the last
/// segment linearly to x=1.
MonotoneRearrangement rearrange(const SeparableSymbol& sym, int r);

/// omega_tilde(k/(n+1)) for k = 1..n.
std::vector<double> sample_rearrangement(const MonotoneRearrangement& rear, int n);

/// Largest symbol value of the Euler-Cauchy 3-point FD symbol:
/// 4 alpha e^{2 sqrt(alpha)} / (e^{sqrt(alpha)} - 1)^2.
double euler_cauchy_symbol_max(double alpha);

/// Exact distribution function phi_alpha(t) of the Euler-Cauchy 3-point FD
/// symbol, on [0, euler_cauchy_symbol_max(alpha)] -> [0,1].
double euler_cauchy_phi(double alpha, double t);

/// d phi_alpha / dt, used by the Newton polish of the inversion.
double euler_cauchy_phi_prime(double alpha, double t);

/// Exact monotone rearrangement value: phi_alpha^{-1}(x) by bracketed
/// bisection with Newton polish to |phi - x| < 1e-12.
double euler_cauchy_omega_tilde(double alpha, double x);

/// Exact rearrangement tabulated at {k/(n+1)} (plus the interval endpoints).
MonotoneRearrangement euler_cauchy_rearrangement(double alpha, int n);

/// |{k : spectrum[k] <= t}| / n for an ascending spectrum.
double counting_function(std::span<const double> spectrum, double t);

}  // namespace spectra::symbol
