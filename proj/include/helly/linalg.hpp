#pragma once

// Dense exact linear algebra over a scalar field, sized for the small
// matrices this project needs (dimension <= 8 or so).

#include "helly/scalars.hpp"

#include <vector>

namespace helly {

template <typename S>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, S(0)) {}
    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    S& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const S& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    Mat operator*(const Mat& o) const {
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const S& v = (*this)(i, k);
                if (sgn_of(v) == Sign::zero) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + v * o(k, j);
            }
        return r;
    }

    std::vector<S> mul_vec(const std::vector<S>& x) const {
        std::vector<S> r(rows_, S(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * x[j];
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

private:
    int rows_, cols_;
    std::vector<S> a_;
};

// Gauss-Jordan inverse. Pivots must have definite nonzero sign; an all-zero
// (or uncertain) pivot column means the matrix is singular as far as the
// backend can tell.
template <typename S>
Mat<S> inverse(const Mat<S>& m) {
    int n = m.rows();
    if (n != m.cols()) fail(Errc::dimension_mismatch, "inverse of non-square matrix");
    Mat<S> a = m;
    Mat<S> inv = Mat<S>::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            Sign s = sgn_of(a(r, col));
            if (s == Sign::positive || s == Sign::negative) {
                piv = r;
                break;
            }
            if (s == Sign::uncertain)
                fail(Errc::uncertain_predicate, "pivot sign uncertain in matrix inverse");
        }
        if (piv < 0) fail(Errc::rank_deficient, "singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        S d = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) = a(col, j) / d;
            inv(col, j) = inv(col, j) / d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            S f = a(r, col);
            if (sgn_of(f) == Sign::zero) continue;
            for (int j = 0; j < n; ++j) {
                a(r, j) = a(r, j) - f * a(col, j);
                inv(r, j) = inv(r, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

template <typename S>
S determinant(Mat<S> a) {
    int n = a.rows();
    if (n != a.cols()) fail(Errc::dimension_mismatch, "determinant of non-square matrix");
    S det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            Sign s = sgn_of(a(r, col));
            if (s == Sign::positive || s == Sign::negative) {
                piv = r;
                break;
            }
            if (s == Sign::uncertain)
                fail(Errc::uncertain_predicate, "pivot sign uncertain in determinant");
        }
        if (piv < 0) return S(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det = det * a(col, col);
        for (int r = col + 1; r < n; ++r) {
            Sign s = sgn_of(a(r, col));
            if (s == Sign::zero) continue;
            S f = a(r, col) / a(col, col);
            for (int j = col; j < n; ++j) a(r, j) = a(r, j) - f * a(col, j);
        }
    }
    return det;
}

// Basis of the (right) nullspace of an r x c matrix, by Gaussian elimination.
template <typename S>
std::vector<std::vector<S>> nullspace(Mat<S> a) {
    int r = a.rows(), c = a.cols();
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int piv = -1;
        for (int i = row; i < r; ++i) {
            Sign s = sgn_of(a(i, col));
            if (s == Sign::positive || s == Sign::negative) {
                piv = i;
                break;
            }
            if (s == Sign::uncertain)
                fail(Errc::uncertain_predicate, "pivot sign uncertain in nullspace");
        }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < c; ++j) std::swap(a(piv, j), a(row, j));
        S d = a(row, col);
        for (int j = 0; j < c; ++j) a(row, j) = a(row, j) / d;
        for (int i = 0; i < r; ++i) {
            if (i == row) continue;
            S f = a(i, col);
            if (sgn_of(f) == Sign::zero) continue;
            for (int j = 0; j < c; ++j) a(i, j) = a(i, j) - f * a(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(c, false);
    for (int pc : pivot_col) is_pivot[pc] = true;
    std::vector<std::vector<S>> basis;
    for (int free = 0; free < c; ++free) {
        if (is_pivot[free]) continue;
        std::vector<S> v(c, S(0));
        v[free] = S(1);
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace helly
