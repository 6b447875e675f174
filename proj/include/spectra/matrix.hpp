#pragma once

#include <vector>
#include <span>
#include <cstddef>

namespace spectra {

/// Dense real square/rectangular matrix, row-major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::span<double> row(int i) { return {a_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)}; }
    std::span<const double> row(int i) const { return {a_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)}; }

    double norm_inf() const;     // max absolute row sum
    double max_abs() const;
    double trace() const;
    bool is_symmetric(double rel_tol) const;
    DenseMatrix transposed() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

/// Square banded matrix with half-bandwidth bw: entries with |i-j| <= bw.
/// Not implicitly symmetric; symmetry is a property checked at use sites.
class BandMatrix {
public:
    BandMatrix() = default;
    BandMatrix(int n, int bw) : n_(n), bw_(bw), a_(static_cast<size_t>(n) * (2 * bw + 1), 0.0) {}

    int size() const { return n_; }
    int bandwidth() const { return bw_; }

    bool in_band(int i, int j) const { return i - j <= bw_ && j - i <= bw_; }
    double& at(int i, int j) { return a_[static_cast<size_t>(i) * (2 * bw_ + 1) + (j - i + bw_)]; }
    double get(int i, int j) const {
        if (!in_band(i, j)) return 0.0;
        return a_[static_cast<size_t>(i) * (2 * bw_ + 1) + (j - i + bw_)];
    }

    double norm_inf() const;
    double trace() const;
    /// Max |A(i,j)-A(j,i)| over the band, relative to norm_inf().
    double asymmetry() const;
    bool is_symmetric(double rel_tol = 1e-12) const;

    DenseMatrix to_dense() const;

private:
    int n_ = 0, bw_ = 0;
    std::vector<double> a_;
};

}  // namespace spectra
