#include "spectra/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace spectra::eig {

namespace {

constexpr int kDenseCap = 3000;
constexpr int kTridiagCap = 100000;

double tridiag_norm_inf(std::span<const double> d, std::span<const double> e) {
    const int n = static_cast<int>(d.size());
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = std::abs(d[i]);
        if (i > 0) s += std::abs(e[i - 1]);
        if (i + 1 < n) s += std::abs(e[i]);
        best = std::max(best, s);
    }
    return best;
}

}  // namespace

bool SpectrumResult::essentially_real(double tol_abs) const {
    for (double v : imag)
        if (std::abs(v) > tol_abs) return false;
    return true;
}

int sturm_count(std::span<const double> diag, std::span<const double> off, double sigma) {
    const int n = static_cast<int>(diag.size());
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    int count = 0;
    double q = diag[0] - sigma;
    // a vanishing pivot is treated (and counted) as a tiny negative one
    if (q == 0.0) q = -tiny;
    if (q < 0) ++count;
    for (int i = 1; i < n; ++i) {
        q = diag[i] - sigma - off[i - 1] * off[i - 1] / q;
        if (q == 0.0) q = -tiny;
        if (q < 0) ++count;
    }
    return count;
}

std::vector<double> eigvals_tridiag(std::span<const double> diag, std::span<const double> off,
                                    int k_lo, int k_hi) {
    const int n = static_cast<int>(diag.size());
    if (n == 0) return {};
    if (n > kTridiagCap) throw std::invalid_argument("eigvals_tridiag: size over cap");
    if (static_cast<int>(off.size()) != n - 1) throw std::invalid_argument("eigvals_tridiag: off size");
    if (k_hi < 0) k_hi = n;
    if (k_lo < 1 || k_hi > n || k_lo > k_hi) throw std::invalid_argument("eigvals_tridiag: index range");

    // Gershgorin bounds
    double glo = diag[0], ghi = diag[0];
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(off[i - 1]);
        if (i + 1 < n) r += std::abs(off[i]);
        glo = std::min(glo, diag[i] - r);
        ghi = std::max(ghi, diag[i] + r);
    }
    const double norm = std::max(tridiag_norm_inf(diag, off), 1e-300);
    const double abs_tol = 1e-13 * norm;

    std::vector<double> out;
    out.reserve(k_hi - k_lo + 1);
    double floor_lo = glo;
    for (int k = k_lo; k <= k_hi; ++k) {
        double lo = floor_lo, hi = ghi;
        // lambda_k = inf { sigma : #eigs < sigma >= k }
        for (int it = 0; it < 160; ++it) {
            if (hi - lo <= std::max(abs_tol, 1e-14 * std::max(std::abs(lo), std::abs(hi)))) break;
            const double mid = lo + 0.5 * (hi - lo);
            if (sturm_count(diag, off, mid) >= k) hi = mid; else lo = mid;
        }
        const double lambda = 0.5 * (lo + hi);
        out.push_back(lambda);
        floor_lo = lo;  // eigenvalues are requested in ascending index order
    }
    return out;
}

void householder_tridiagonalize(DenseMatrix& a, std::vector<double>& diag, std::vector<double>& off) {
    const int n = a.rows();
    diag.assign(n, 0.0);
    off.assign(std::max(n - 1, 0), 0.0);
    std::vector<double> v(n), p(n);
    for (int k = 0; k < n - 2; ++k) {
        double scale = 0.0;
        for (int i = k + 1; i < n; ++i) scale += std::abs(a(i, k));
        if (scale == 0.0) { off[k] = 0.0; continue; }
        double xnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = a(i, k) / scale;
            xnorm2 += v[i] * v[i];
        }
        double alpha = std::sqrt(xnorm2);
        if (v[k + 1] > 0) alpha = -alpha;
        off[k] = scale * alpha;
        v[k + 1] -= alpha;
        double vnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) vnorm2 += v[i] * v[i];
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;
        // p = beta * A22 * v
        for (int i = k + 1; i < n; ++i) {
            double s = 0.0;
            for (int j = k + 1; j < n; ++j) s += a(i, j) * v[j];
            p[i] = beta * s;
        }
        double vp = 0.0;
        for (int i = k + 1; i < n; ++i) vp += v[i] * p[i];
        const double c = 0.5 * beta * vp;
        for (int i = k + 1; i < n; ++i) p[i] -= c * v[i];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a(i, j) -= v[i] * p[j] + p[i] * v[j];
    }
    for (int i = 0; i < n; ++i) diag[i] = a(i, i);
    if (n >= 2) off[n - 2] = a(n - 1, n - 2);
}

namespace {

SpectrumResult sym_result(std::vector<double> vals, double norm, const char* method) {
    SpectrumResult r;
    r.values = std::move(vals);
    r.residual_bound = 1e-10 * norm;
    r.method = method;
    return r;
}

SpectrumResult eigvals_sym_dense_impl(DenseMatrix a) {
    const int n = a.rows();
    if (n > kDenseCap) throw std::invalid_argument("eigvals_sym: size over dense cap");
    const double norm = a.norm_inf();
    std::vector<double> d, e;
    householder_tridiagonalize(a, d, e);
    return sym_result(eigvals_tridiag(d, e), norm, "householder+sturm");
}

}  // namespace

SpectrumResult eigvals_sym(const BandMatrix& a) {
    if (!a.is_symmetric(1e-12)) throw std::invalid_argument("eigvals_sym: matrix not symmetric");
    const int n = a.size();
    if (a.bandwidth() <= 1) {
        std::vector<double> d(n), e(std::max(n - 1, 0));
        for (int i = 0; i < n; ++i) d[i] = a.get(i, i);
        for (int i = 0; i + 1 < n; ++i) e[i] = 0.5 * (a.get(i, i + 1) + a.get(i + 1, i));
        return sym_result(eigvals_tridiag(d, e), a.norm_inf(), "sturm");
    }
    return eigvals_sym_dense_impl(a.to_dense());
}

SpectrumResult eigvals_sym(const DenseMatrix& a) {
    if (!a.is_symmetric(1e-12)) throw std::invalid_argument("eigvals_sym: matrix not symmetric");
    // use the tridiagonal fast path when the dense input happens to be tridiagonal
    const int n = a.rows();
    bool tridiag = true;
    for (int i = 0; i < n && tridiag; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(i - j) > 1 && a(i, j) != 0.0) { tridiag = false; break; }
    if (tridiag && n >= 1) {
        std::vector<double> d(n), e(std::max(n - 1, 0));
        for (int i = 0; i < n; ++i) d[i] = a(i, i);
        for (int i = 0; i + 1 < n; ++i) e[i] = 0.5 * (a(i, i + 1) + a(i + 1, i));
        return sym_result(eigvals_tridiag(d, e), a.norm_inf(), "sturm");
    }
    return eigvals_sym_dense_impl(a);
}

namespace {

/// Banded lower Cholesky factor of m; bands stored like BandMatrix.
/// Throws std::runtime_error on breakdown.
BandMatrix cholesky_band(const BandMatrix& m) {
    const int n = m.size(), bw = m.bandwidth();
    BandMatrix L(n, bw);
    for (int j = 0; j < n; ++j) {
        double s = m.get(j, j);
        for (int k = std::max(0, j - bw); k < j; ++k) s -= L.get(j, k) * L.get(j, k);
        if (!(s > 0.0)) throw std::runtime_error("eigvals_gen_sym: Cholesky breakdown, M not SPD");
        const double ljj = std::sqrt(s);
        L.at(j, j) = ljj;
        for (int i = j + 1; i <= std::min(n - 1, j + bw); ++i) {
            double t = m.get(i, j);
            for (int k = std::max(0, i - bw); k < j; ++k) t -= L.get(i, k) * L.get(j, k);
            L.at(i, j) = t / ljj;
        }
    }
    return L;
}

/// Overwrite each column c of x with L^{-1} c (forward substitution, banded L).
void forward_solve_band(const BandMatrix& L, DenseMatrix& x) {
    const int n = L.size(), bw = L.bandwidth(), m = x.cols();
    for (int i = 0; i < n; ++i) {
        const double lii = L.get(i, i);
        for (int c = 0; c < m; ++c) {
            double s = x(i, c);
            for (int k = std::max(0, i - bw); k < i; ++k) s -= L.get(i, k) * x(k, c);
            x(i, c) = s / lii;
        }
    }
}

}  // namespace

SpectrumResult eigvals_gen_sym(const BandMatrix& k, const BandMatrix& m) {
    if (k.size() != m.size()) throw std::invalid_argument("eigvals_gen_sym: size mismatch");
    const BandMatrix L = cholesky_band(m);
    // C = L^{-1} K L^{-T}, formed densely
    DenseMatrix y = k.to_dense();
    forward_solve_band(L, y);        // Y = L^{-1} K
    DenseMatrix yt = y.transposed();
    forward_solve_band(L, yt);       // (L^{-1} Y^T) = L^{-1} K^T L^{-T} = C^T
    const int n = k.size();
    DenseMatrix c(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c(i, j) = 0.5 * (yt(i, j) + yt(j, i));
    SpectrumResult r = eigvals_sym(c);
    r.method = "cholesky+" + r.method;
    return r;
}

// ---------------------------------------------------------------------------
// General real eigenvalues: Householder Hessenberg + Francis double-shift QR.
// ---------------------------------------------------------------------------

namespace {

void hessenberg_reduce(DenseMatrix& a) {
    const int n = a.rows();
    std::vector<double> v(n);
    for (int k = 0; k < n - 2; ++k) {
        double scale = 0.0;
        for (int i = k + 1; i < n; ++i) scale = std::max(scale, std::abs(a(i, k)));
        if (scale == 0.0) continue;
        double xnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = a(i, k) / scale;
            xnorm2 += v[i] * v[i];
        }
        double alpha = std::sqrt(xnorm2);
        if (v[k + 1] > 0) alpha = -alpha;
        v[k + 1] -= alpha;
        double vnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) vnorm2 += v[i] * v[i];
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;
        // A <- H A   (rows k+1..n-1)
        for (int j = k; j < n; ++j) {
            double s = 0.0;
            for (int i = k + 1; i < n; ++i) s += v[i] * a(i, j);
            s *= beta;
            for (int i = k + 1; i < n; ++i) a(i, j) -= s * v[i];
        }
        // A <- A H   (cols k+1..n-1)
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = k + 1; j < n; ++j) s += a(i, j) * v[j];
            s *= beta;
            for (int j = k + 1; j < n; ++j) a(i, j) -= s * v[j];
        }
    }
    // clear negligible sub-subdiagonal fill
    for (int i = 2; i < n; ++i)
        for (int j = 0; j < i - 1; ++j) a(i, j) = 0.0;
}

inline double sign_of(double a, double b) { return b >= 0 ? std::abs(a) : -std::abs(a); }

/// Francis double-shift QR on an upper Hessenberg matrix; eigenvalues only.
void hqr(DenseMatrix& h, std::vector<double>& wr, std::vector<double>& wi) {
    const int n = h.rows();
    wr.assign(n, 0.0);
    wi.assign(n, 0.0);
    const double eps = std::numeric_limits<double>::epsilon();
    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(h(i, j));
    if (anorm == 0.0) return;

    int nn = n - 1;
    double t = 0.0;
    while (nn >= 0) {
        int its = 0;
        int l;
        do {
            for (l = nn; l >= 1; --l) {
                double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(h(l, l - 1)) <= eps * s) {
                    h(l, l - 1) = 0.0;
                    break;
                }
            }
            double x = h(nn, nn);
            if (l == nn) {
                wr[nn] = x + t;
                wi[nn] = 0.0;
                --nn;
            } else {
                double y = h(nn - 1, nn - 1);
                double w = h(nn, nn - 1) * h(nn - 1, nn);
                if (l == nn - 1) {
                    double p = 0.5 * (y - x);
                    double q = p * p + w;
                    double z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + sign_of(z, p);
                        wr[nn - 1] = wr[nn] = x + z;
                        if (z != 0.0) wr[nn] = x - w / z;
                        wi[nn - 1] = wi[nn] = 0.0;
                    } else {
                        wr[nn - 1] = wr[nn] = x + p;
                        wi[nn - 1] = -(wi[nn] = z);
                    }
                    nn -= 2;
                } else {
                    if (its == 50) throw std::runtime_error("eigvals_general: QR iteration did not converge");
                    if (its % 10 == 0 && its > 0) {
                        // deterministic exceptional shift
                        t += x;
                        for (int i = 0; i <= nn; ++i) h(i, i) -= x;
                        double s = std::abs(h(nn, nn - 1)) + std::abs(h(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    int m;
                    double p = 0, q = 0, r = 0, z = 0;
                    for (m = nn - 2; m >= l; --m) {
                        z = h(m, m);
                        const double rr = x - z;
                        double ss = y - z;
                        p = (rr * ss - w) / h(m + 1, m) + h(m, m + 1);
                        q = h(m + 1, m + 1) - z - rr - ss;
                        r = h(m + 2, m + 1);
                        ss = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= ss; q /= ss; r /= ss;
                        if (m == l) break;
                        const double u = std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v = std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) + std::abs(h(m + 1, m + 1)));
                        if (u <= eps * v) break;
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        h(i, i - 2) = 0.0;
                        if (i != m + 2) h(i, i - 3) = 0.0;
                    }
                    for (int k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = h(k, k - 1);
                            q = h(k + 1, k - 1);
                            r = (k != nn - 1) ? h(k + 2, k - 1) : 0.0;
                            x = std::abs(p) + std::abs(q) + std::abs(r);
                            if (x != 0.0) { p /= x; q /= x; r /= x; }
                        }
                        double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
                        if (s == 0.0) continue;
                        if (k == m) {
                            if (l != m) h(k, k - 1) = -h(k, k - 1);
                        } else {
                            h(k, k - 1) = -s * x;
                        }
                        p += s;
                        x = p / s;
                        double yy = q / s;
                        z = r / s;
                        q /= p;
                        r /= p;
                        for (int j = k; j <= nn; ++j) {
                            double pp = h(k, j) + q * h(k + 1, j);
                            if (k != nn - 1) pp += r * h(k + 2, j);
                            h(k, j) -= pp * x;
                            h(k + 1, j) -= pp * yy;
                            if (k != nn - 1) h(k + 2, j) -= pp * z;
                        }
                        const int mmin = std::min(nn, k + 3);
                        for (int i = l; i <= mmin; ++i) {
                            double pp = x * h(i, k) + yy * h(i, k + 1);
                            if (k != nn - 1) pp += z * h(i, k + 2);
                            h(i, k) -= pp;
                            h(i, k + 1) -= pp * q;
                            if (k != nn - 1) h(i, k + 2) -= pp * r;
                        }
                    }
                }
            }
        } while (l < nn - 1);
    }
}

}  // namespace

SpectrumResult eigvals_general(const DenseMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("eigvals_general: not square");
    const int n = a.rows();
    if (n > kDenseCap) throw std::invalid_argument("eigvals_general: size over cap");
    const double norm = a.norm_inf();

    DenseMatrix h = a;
    hessenberg_reduce(h);
    std::vector<double> wr, wi;
    hqr(h, wr, wi);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (wr[i] != wr[j]) return wr[i] < wr[j];
        return wi[i] < wi[j];
    });
    SpectrumResult r;
    r.values.resize(n);
    r.imag.resize(n);
    for (int i = 0; i < n; ++i) {
        r.values[i] = wr[order[i]];
        r.imag[i] = wi[order[i]];
    }
    r.residual_bound = 1e-10 * norm;
    r.method = "hessenberg+qr";
    return r;
}

SpectrumResult eigvals_general(const BandMatrix& a) {
    const int n = a.size();
    if (a.bandwidth() <= 1) {
        // sign-symmetric tridiagonal matrices are diagonally similar to a
        // symmetric one; use the Sturm path when that similarity exists
        bool sign_sym = true;
        for (int i = 0; i + 1 < n; ++i) {
            const double prod = a.get(i, i + 1) * a.get(i + 1, i);
            if (prod < 0.0 || (prod == 0.0 && (a.get(i, i + 1) != 0.0 || a.get(i + 1, i) != 0.0))) {
                sign_sym = false;
                break;
            }
        }
        if (sign_sym) {
            std::vector<double> d(n), e(std::max(n - 1, 0));
            for (int i = 0; i < n; ++i) d[i] = a.get(i, i);
            for (int i = 0; i + 1 < n; ++i) e[i] = std::sqrt(a.get(i, i + 1) * a.get(i + 1, i));
            SpectrumResult r = sym_result(eigvals_tridiag(d, e), a.norm_inf(), "tridiag-similarity+sturm");
            r.imag.assign(n, 0.0);
            return r;
        }
    }
    return eigvals_general(a.to_dense());
}

}  // namespace spectra::eig
