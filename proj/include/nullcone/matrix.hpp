#ifndef NULLCONE_MATRIX_HPP
#define NULLCONE_MATRIX_HPP

#include "nullcone/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nullcone {

/// Dense matrix of rationals with exact Gaussian elimination.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RatMat identity(std::size_t n) {
        RatMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RatMat diagonal(const std::vector<Rational>& d) {
        RatMat m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RatMat& a, const RatMat& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    RatMat transpose() const {
        RatMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend RatMat operator*(const RatMat& a, const RatMat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RatMat: dimension mismatch in product");
        RatMat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend RatMat operator+(const RatMat& a, const RatMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("RatMat: dimension mismatch in sum");
        RatMat r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }

    friend RatMat operator-(const RatMat& a, const RatMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("RatMat: dimension mismatch in difference");
        RatMat r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    RatMat scaled(const Rational& c) const {
        RatMat r = *this;
        for (auto& x : r.data_) x *= c;
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("RatMat::apply: length mismatch");
        std::vector<Rational> out(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    std::vector<Rational> column(std::size_t j) const {
        std::vector<Rational> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    /// Reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = row;
            while (sel < rows_ && (*this)(sel, col) == 0) ++sel;
            if (sel == rows_) continue;
            swap_rows(sel, row);
            const Rational inv = Rational(1) / (*this)(row, col);
            for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row) continue;
                const Rational f = (*this)(i, col);
                if (f == 0) continue;
                for (std::size_t j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        RatMat tmp = *this;
        return tmp.rref().size();
    }

    Rational determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("RatMat::determinant: not square");
        RatMat tmp = *this;
        Rational det(1);
        std::size_t n = rows_;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t sel = col;
            while (sel < n && tmp(sel, col) == 0) ++sel;
            if (sel == n) return Rational(0);
            if (sel != col) {
                tmp.swap_rows(sel, col);
                det = -det;
            }
            det *= tmp(col, col);
            const Rational inv = Rational(1) / tmp(col, col);
            for (std::size_t i = col + 1; i < n; ++i) {
                const Rational f = tmp(i, col) * inv;
                if (f == 0) continue;
                for (std::size_t j = col; j < n; ++j) tmp(i, j) -= f * tmp(col, j);
            }
        }
        return det;
    }

    /// Basis of the null space, one vector per free column.
    std::vector<std::vector<Rational>> kernel_basis() const {
        RatMat tmp = *this;
        const auto pivots = tmp.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Rational>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Rational> v(cols_, Rational(0));
            v[free] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -tmp(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Basis of the column space: the columns of the original matrix sitting
    /// at the pivot positions.
    std::vector<std::vector<Rational>> image_basis() const {
        RatMat tmp = *this;
        const auto pivots = tmp.rref();
        std::vector<std::vector<Rational>> basis;
        basis.reserve(pivots.size());
        for (auto c : pivots) basis.push_back(column(c));
        return basis;
    }

    std::optional<RatMat> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("RatMat::inverse: not square");
        RatMat aug(rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = 1;
        }
        const auto pivots = aug.rref();
        if (pivots.size() != rows_) return std::nullopt;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (pivots[i] != i) return std::nullopt;
        RatMat inv(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Stacks row vectors into a matrix.
inline RatMat rows_to_matrix(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    RatMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("rows_to_matrix: ragged input");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

inline RatMat columns_to_matrix(const std::vector<std::vector<Rational>>& cols, std::size_t rows) {
    RatMat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("columns_to_matrix: ragged input");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

/// Exact span equality via ranks of stacked bases.
inline bool same_span(const std::vector<std::vector<Rational>>& a,
                      const std::vector<std::vector<Rational>>& b, std::size_t dim) {
    RatMat ma = rows_to_matrix(a, dim);
    RatMat mb = rows_to_matrix(b, dim);
    const std::size_t ra = ma.rank(), rb = mb.rank();
    if (ra != rb) return false;
    std::vector<std::vector<Rational>> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return rows_to_matrix(all, dim).rank() == ra;
}

} // namespace nullcone

#endif
