#pragma once

#include <functional>
#include <string>
#include <vector>

namespace spectra::grids {

/// Grid map tau : [a,b] -> [a,b] with its derivative. Validity (endpoint
/// fixing, monotonicity, nonvanishing derivative) is checked by probing.
struct Diffeomorphism {
    std::function<double(double)> tau;
    std::function<double(double)> tau_prime;
    std::string label;
};

Diffeomorphism identity_map();

/// Composite exponential map on [1, e^sqrt(alpha)]:
///   tau = tau2 . tau1,  tau1(x) = (x-1)/(e^sqrt(alpha)-1),  tau2(y) = e^{sqrt(alpha) y}.
/// Its amplitude identity alpha tau^2 / tau'^2 = (e^sqrt(alpha)-1)^2 makes the
/// FD/IgA symbol amplitude constant. Rejects alpha <= 0.
Diffeomorphism exp_map(double alpha);

/// Probes tau on 1000 points; throws std::invalid_argument on endpoint
/// mismatch (1e-12), non-monotonicity or vanishing derivative.
void validate_diffeomorphism(const Diffeomorphism& map, double a, double b);

/// Grid with eta ghost nodes per side: nodes x_{1-eta} .. x_{n+eta},
/// x_j = a + (b-a) j/(n+1). Ghost nodes (j <= 0, j >= n+1) always keep the
/// unmapped uniform values.
class ExtendedGrid {
public:
    ExtendedGrid(double a, double b, int n, int eta, std::vector<double> nodes);

    double a() const { return a_; }
    double b() const { return b_; }
    int n() const { return n_; }
    int eta() const { return eta_; }

    /// Node by grid index j in [1-eta, n+eta].
    double node(int j) const { return nodes_[static_cast<size_t>(j - (1 - eta_))]; }
    double& node(int j) { return nodes_[static_cast<size_t>(j - (1 - eta_))]; }
    const std::vector<double>& nodes() const { return nodes_; }

    void check_strictly_increasing() const;

private:
    double a_, b_;
    int n_, eta_;
    std::vector<double> nodes_;
};

/// Equispaced extended grid on [a,b] with n interior nodes.
ExtendedGrid uniform_grid(double a, double b, int n, int eta);

/// Maps the interior nodes by tau; ghost nodes stay at their uniform values
/// (the piecewise extension of tau is the identity outside [a,b]).
ExtendedGrid mapped_grid(const ExtendedGrid& grid, const Diffeomorphism& map);

}  // namespace spectra::grids
