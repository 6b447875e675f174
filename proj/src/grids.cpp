#include "spectra/grids.hpp"

#include <cmath>
#include <stdexcept>

namespace spectra::grids {

Diffeomorphism identity_map() {
    return {[](double x) { return x; }, [](double) { return 1.0; }, "identity"};
}

Diffeomorphism exp_map(double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("exp_map: alpha must be positive");
    const double sa = std::sqrt(alpha);
    const double em1 = std::expm1(sa);  // e^sqrt(alpha) - 1
    Diffeomorphism d;
    d.tau = [sa, em1](double x) { return std::exp(sa * (x - 1.0) / em1); };
    d.tau_prime = [sa, em1](double x) { return sa / em1 * std::exp(sa * (x - 1.0) / em1); };
    d.label = "exp";
    return d;
}

void validate_diffeomorphism(const Diffeomorphism& map, double a, double b) {
    const double span = b - a;
    if (std::abs(map.tau(a) - a) > 1e-12 * std::max(1.0, std::abs(a)) ||
        std::abs(map.tau(b) - b) > 1e-12 * std::max(1.0, std::abs(b)))
        throw std::invalid_argument("diffeomorphism does not fix the endpoints");
    const int probes = 1000;
    double prev = map.tau(a);
    for (int i = 1; i <= probes; ++i) {
        const double x = a + span * i / probes;
        const double t = map.tau(x);
        if (!(t > prev)) throw std::invalid_argument("diffeomorphism not strictly monotone on probe grid");
        if (map.tau_prime(x) == 0.0) throw std::invalid_argument("diffeomorphism derivative vanishes on probe grid");
        prev = t;
    }
}

ExtendedGrid::ExtendedGrid(double a, double b, int n, int eta, std::vector<double> nodes)
    : a_(a), b_(b), n_(n), eta_(eta), nodes_(std::move(nodes)) {
    if (static_cast<int>(nodes_.size()) != n_ + 2 * eta_)
        throw std::invalid_argument("ExtendedGrid: node count mismatch");
}

void ExtendedGrid::check_strictly_increasing() const {
    for (size_t i = 1; i < nodes_.size(); ++i)
        if (!(nodes_[i] > nodes_[i - 1]))
            throw std::invalid_argument("grid nodes not strictly increasing");
}

ExtendedGrid uniform_grid(double a, double b, int n, int eta) {
    if (n < 1) throw std::invalid_argument("uniform_grid: n must be >= 1");
    if (eta < 1) throw std::invalid_argument("uniform_grid: eta must be >= 1");
    if (!(b > a)) throw std::invalid_argument("uniform_grid: b must exceed a");
    std::vector<double> nodes;
    nodes.reserve(n + 2 * eta);
    for (int j = 1 - eta; j <= n + eta; ++j) nodes.push_back(a + (b - a) * j / (n + 1));
    return ExtendedGrid(a, b, n, eta, std::move(nodes));
}

ExtendedGrid mapped_grid(const ExtendedGrid& grid, const Diffeomorphism& map) {
    validate_diffeomorphism(map, grid.a(), grid.b());
    ExtendedGrid out = grid;
    for (int j = 1; j <= grid.n(); ++j) out.node(j) = map.tau(grid.node(j));
    out.check_strictly_increasing();
    return out;
}

}  // namespace spectra::grids
