#include "spectra/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spectra/numerics.hpp"

namespace spectra::symbol {

SeparableSymbol make_symbol(const problems::SLProblem& prob, const grids::Diffeomorphism& map,
                            std::function<double(double)> freq) {
    SeparableSymbol sym;
    const double span2 = (prob.b - prob.a) * (prob.b - prob.a);
    const auto p = prob.p, w = prob.w;
    const auto tau = map.tau, tau_prime = map.tau_prime;
    sym.amp = [p, w, tau, tau_prime, span2](double x) {
        const double tx = tau(x);
        const double tp = tau_prime(x);
        return p(tx) / (w(tx) * tp * tp * span2);
    };
    sym.freq = std::move(freq);
    sym.xa = prob.a;
    sym.xb = prob.b;
    return sym;
}

SeparableSymbol l1_symbol() {
    SeparableSymbol sym;
    sym.amp = [](double x) { return 1.0 / std::sqrt(x); };
    sym.freq = [](double theta) { return 2.0 - 2.0 * std::cos(theta); };
    sym.xa = 0.0;
    sym.xb = 1.0;
    sym.unbounded = true;
    return sym;
}

namespace {

struct Extrema {
    double min, max;
};

Extrema probe_extrema(const std::function<double(double)>& f, double lo, double hi) {
    const int probes = 2000;
    double best_min = std::numeric_limits<double>::infinity();
    double best_max = -best_min;
    int imin = 0, imax = 0;
    for (int i = 0; i <= probes; ++i) {
        const double x = lo + (hi - lo) * i / probes;
        const double v = f(x);
        if (!std::isfinite(v)) continue;
        if (v < best_min) { best_min = v; imin = i; }
        if (v > best_max) { best_max = v; imax = i; }
    }
    const double step = (hi - lo) / probes;
    const double tol = 1e-10 * (hi - lo) + 1e-14;
    auto refine = [&](int i, double sgn) {
        const double a = std::max(lo, lo + (i - 1) * step);
        const double b = std::min(hi, lo + (i + 1) * step);
        const double x = num::golden_max([&](double t) { return sgn * f(t); }, a, b, tol);
        return f(x);
    };
    Extrema e;
    e.max = std::max(best_max, refine(imax, 1.0));
    e.min = std::min(best_min, refine(imin, -1.0));
    return e;
}

}  // namespace

Range essential_range(const SeparableSymbol& sym) {
    const Extrema ef = probe_extrema(sym.freq, 0.0, M_PI);
    Range rng;
    if (sym.unbounded) {
        // probe away from the singular endpoint; the sup is infinite
        const double pad = (sym.xb - sym.xa) * 1e-6;
        const Extrema ea = probe_extrema(sym.amp, sym.xa + pad, sym.xb);
        rng.lo = ea.min * ef.min;
        rng.hi = std::numeric_limits<double>::infinity();
        rng.bounded = false;
        return rng;
    }
    const Extrema ea = probe_extrema(sym.amp, sym.xa, sym.xb);
    rng.lo = ea.min * ef.min;
    rng.hi = ea.max * ef.max;
    return rng;
}

bool is_outlier(double lambda, const SeparableSymbol& sym, double eps) {
    const Range rng = essential_range(sym);
    if (!rng.bounded) return lambda < rng.lo - eps * std::max(std::abs(rng.lo), 1.0);
    const double width = rng.hi - rng.lo;
    return lambda < rng.lo - eps * width || lambda > rng.hi + eps * width;
}

MonotoneRearrangement::MonotoneRearrangement(std::vector<double> xs, std::vector<double> vals,
                                             RearrangeMode mode, int r)
    : xs_(std::move(xs)), vals_(std::move(vals)), mode_(mode), r_(r) {
    if (xs_.size() != vals_.size() || xs_.size() < 2)
        throw std::invalid_argument("MonotoneRearrangement: breakpoint/value mismatch");
    for (size_t i = 1; i < xs_.size(); ++i) {
        if (!(xs_[i] > xs_[i - 1])) throw std::invalid_argument("MonotoneRearrangement: breakpoints not increasing");
        if (vals_[i] < vals_[i - 1]) throw std::invalid_argument("MonotoneRearrangement: values not nondecreasing");
    }
}

double MonotoneRearrangement::operator()(double x) const {
    if (x <= xs_.front()) return vals_.front();
    if (x >= xs_.back()) return vals_.back();
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const size_t i = static_cast<size_t>(it - xs_.begin());
    const double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
    return vals_[i - 1] + t * (vals_[i] - vals_[i - 1]);
}

double MonotoneRearrangement::inverse(double t) const {
    if (t <= vals_.front()) return xs_.front();
    if (t >= vals_.back()) return xs_.back();
    const auto it = std::lower_bound(vals_.begin(), vals_.end(), t);
    const size_t i = static_cast<size_t>(it - vals_.begin());
    if (vals_[i] == vals_[i - 1]) return xs_[i - 1];
    const double s = (t - vals_[i - 1]) / (vals_[i] - vals_[i - 1]);
    return xs_[i - 1] + s * (xs_[i] - xs_[i - 1]);
}

MonotoneRearrangement rearrange(const SeparableSymbol& sym, int r) {
    if (r < 2) throw std::invalid_argument("rearrange: r must be >= 2");
    std::vector<double> amp(r), freq(r);
    for (int i = 1; i <= r; ++i) {
        amp[i - 1] = sym.amp(sym.xa + (sym.xb - sym.xa) * i / (r + 1));
        freq[i - 1] = sym.freq(M_PI * i / (r + 1));
    }
    std::vector<double> samples;
    samples.reserve(static_cast<size_t>(r) * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) samples.push_back(amp[i] * freq[j]);
    std::sort(samples.begin(), samples.end());

    std::vector<double> xs, vals;
    if (!sym.unbounded) {
        const Range rng = essential_range(sym);
        const size_t m = samples.size();
        xs.reserve(m + 2);
        vals.reserve(m + 2);
        xs.push_back(0.0);
        vals.push_back(std::min(rng.lo, samples.front()));
        for (size_t j = 1; j <= m; ++j) {
            xs.push_back(static_cast<double>(j) / (m + 1));
            vals.push_back(samples[j - 1]);
        }
        xs.push_back(1.0);
        vals.push_back(std::max(rng.hi, samples.back()));
    } else {
        // no finite max exists: keep r sample quantiles and extend the last
        // segment linearly to x=1
        xs.reserve(r + 2);
        vals.reserve(r + 2);
        xs.push_back(0.0);
        vals.push_back(samples.front());
        for (int j = 1; j <= r; ++j) {
            xs.push_back(static_cast<double>(j) / (r + 1));
            vals.push_back(samples[static_cast<size_t>(j) * r - 1]);
        }
        const double q_last = vals.back();
        const double q_prev = vals[vals.size() - 2];
        xs.push_back(1.0);
        vals.push_back(std::max(q_last, 2.0 * q_last - q_prev));
    }
    return MonotoneRearrangement(std::move(xs), std::move(vals), RearrangeMode::approx, r);
}

std::vector<double> sample_rearrangement(const MonotoneRearrangement& rear, int n) {
    std::vector<double> out(n);
    for (int k = 1; k <= n; ++k) out[k - 1] = rear(static_cast<double>(k) / (n + 1));
    return out;
}

// ---------------------------------------------------------------------------
// Exact Euler-Cauchy rearrangement.
//
// phi_alpha(t) integrates the theta-measure of sublevel sets of
// alpha x^2 (2-2cos theta)/(e^sqrt(alpha)-1)^2 in closed form. The
// antiderivative of 2 arcsin(A/x) in x is
//     Phi(t,x) = 2A log(x + sqrt(x^2 - A^2)) + 2x arcsin(A/x),
// with A = (e^sqrt(alpha)-1) sqrt(t) / (2 sqrt(alpha)).
// ---------------------------------------------------------------------------

namespace {

struct ECParams {
    double sa;    // sqrt(alpha)
    double em1;   // e^sqrt(alpha) - 1
    double eb;    // e^sqrt(alpha)
    double c;     // em1 / (2 sa)
    double t_lo;  // 4 alpha / em1^2, branch split
    double t_hi;  // 4 alpha e^{2 sa} / em1^2, symbol max
};

ECParams ec_params(double alpha) {
    if (alpha <= 0.0) throw std::invalid_argument("euler_cauchy symbol: alpha must be positive");
    ECParams p;
    p.sa = std::sqrt(alpha);
    p.em1 = std::expm1(p.sa);
    p.eb = p.em1 + 1.0;
    p.c = p.em1 / (2.0 * p.sa);
    p.t_lo = 4.0 * alpha / (p.em1 * p.em1);
    p.t_hi = p.t_lo * p.eb * p.eb;
    return p;
}

double safe_asin(double u) { return std::asin(std::clamp(u, -1.0, 1.0)); }

double phi_antiderivative(double big_a, double x) {
    const double rad = std::sqrt(std::max(0.0, x * x - big_a * big_a));
    return 2.0 * big_a * std::log(x + rad) + 2.0 * x * safe_asin(big_a / x);
}

}  // namespace

double euler_cauchy_symbol_max(double alpha) { return ec_params(alpha).t_hi; }

double euler_cauchy_phi(double alpha, double t) {
    const ECParams p = ec_params(alpha);
    if (t < -1e-12 * p.t_hi || t > p.t_hi * (1.0 + 1e-12))
        throw std::invalid_argument("euler_cauchy_phi: t outside the symbol range");
    t = std::clamp(t, 0.0, p.t_hi);
    if (t == 0.0) return 0.0;
    const double big_a = p.c * std::sqrt(t);
    double measure;
    if (t <= p.t_lo) {
        measure = phi_antiderivative(big_a, p.eb) - phi_antiderivative(big_a, 1.0);
    } else {
        measure = M_PI * (big_a - 1.0) + phi_antiderivative(big_a, p.eb) -
                  (2.0 * big_a * std::log(big_a) + M_PI * big_a);
    }
    return std::clamp(measure / (M_PI * p.em1), 0.0, 1.0);
}

double euler_cauchy_phi_prime(double alpha, double t) {
    const ECParams p = ec_params(alpha);
    if (t <= 0.0 || t >= p.t_hi) return 0.0;
    const double big_a = p.c * std::sqrt(t);
    const double xl = std::max(1.0, big_a);
    const double upper = std::log(p.eb + std::sqrt(std::max(0.0, p.eb * p.eb - big_a * big_a)));
    const double lower = std::log(xl + std::sqrt(std::max(0.0, xl * xl - big_a * big_a)));
    return big_a / t * (upper - lower) / (M_PI * p.em1);
}

double euler_cauchy_omega_tilde(double alpha, double x) {
    const ECParams p = ec_params(alpha);
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("euler_cauchy_omega_tilde: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return p.t_hi;
    double lo = 0.0, hi = p.t_hi;
    double t = 0.5 * p.t_hi;
    for (int it = 0; it < 200; ++it) {
        const double f = euler_cauchy_phi(alpha, t) - x;
        if (std::abs(f) < 1e-15) break;
        if (f > 0) hi = t; else lo = t;
        const double fp = euler_cauchy_phi_prime(alpha, t);
        double next = fp > 0.0 ? t - f / fp : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - t) < 1e-16 * p.t_hi) { t = next; break; }
        t = next;
    }
    return t;
}

MonotoneRearrangement euler_cauchy_rearrangement(double alpha, int n) {
    const ECParams p = ec_params(alpha);
    std::vector<double> xs, vals;
    xs.reserve(n + 2);
    vals.reserve(n + 2);
    xs.push_back(0.0);
    vals.push_back(0.0);
    for (int k = 1; k <= n; ++k) {
        xs.push_back(static_cast<double>(k) / (n + 1));
        vals.push_back(euler_cauchy_omega_tilde(alpha, xs.back()));
    }
    xs.push_back(1.0);
    vals.push_back(p.t_hi);
    return MonotoneRearrangement(std::move(xs), std::move(vals), RearrangeMode::exact, n);
}

double counting_function(std::span<const double> spectrum, double t) {
    const auto it = std::upper_bound(spectrum.begin(), spectrum.end(), t);
    return static_cast<double>(it - spectrum.begin()) / static_cast<double>(spectrum.size());
}

}  // namespace spectra::symbol
