#include "spectra/matrix.hpp"

#include <cmath>
#include <algorithm>

namespace spectra {

double DenseMatrix::norm_inf() const {
    double best = 0.0;
    for (int i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (int j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

double DenseMatrix::max_abs() const {
    double best = 0.0;
    for (double v : a_) best = std::max(best, std::abs(v));
    return best;
}

double DenseMatrix::trace() const {
    double s = 0.0;
    const int m = std::min(rows_, cols_);
    for (int i = 0; i < m; ++i) s += (*this)(i, i);
    return s;
}

bool DenseMatrix::is_symmetric(double rel_tol) const {
    if (rows_ != cols_) return false;
    const double scale = std::max(max_abs(), 1e-300);
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > rel_tol * scale) return false;
    return true;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double BandMatrix::norm_inf() const {
    double best = 0.0;
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = std::max(0, i - bw_); j <= std::min(n_ - 1, i + bw_); ++j) s += std::abs(get(i, j));
        best = std::max(best, s);
    }
    return best;
}

double BandMatrix::trace() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += get(i, i);
    return s;
}

double BandMatrix::asymmetry() const {
    double worst = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j <= std::min(n_ - 1, i + bw_); ++j)
            worst = std::max(worst, std::abs(get(i, j) - get(j, i)));
    const double scale = std::max(norm_inf(), 1e-300);
    return worst / scale;
}

bool BandMatrix::is_symmetric(double rel_tol) const { return asymmetry() <= rel_tol; }

DenseMatrix BandMatrix::to_dense() const {
    DenseMatrix d(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = std::max(0, i - bw_); j <= std::min(n_ - 1, i + bw_); ++j) d(i, j) = get(i, j);
    return d;
}

}  // namespace spectra
