#pragma once

#include "abelaut/error.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abelaut {

// Dense row-major matrix over an exact ring R.
// 
// R only needs +, -, *, == and the ring hooks zero_like / one_like / is_zero
// found by ADL; field algorithms (determinant, rank, kernel, inverse) also use /.
template <class R>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const R& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    explicit Matrix(std::vector<std::vector<R>> rows);

    static Matrix identity(std::size_t n, const R& sample) {
        Matrix m(n, n, zero_like(sample));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(sample);
        return m;
    }
    static Matrix diagonal(const std::vector<R>& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<R> row(std::size_t i) const {
        return std::vector<R>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    std::vector<R> column(std::size_t j) const {
        std::vector<R> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class F>
    auto map(F&& f) const {
        using S = decltype(f(std::declval<const R&>()));
        std::vector<S> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(f(x));
        return Matrix<S>(rows_, cols_, std::move(out));
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::arity_mismatch, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_, a.zero());
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const R& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const R& bkj = b(k, j);
                    if (is_zero(bkj)) continue;
                    c(i, j) += aik * bkj;
                }
            }
        }
        return c;
    }

    std::vector<R> apply(const std::vector<R>& v) const {
        if (v.size() != cols_) throw Error(ErrorKind::arity_mismatch, "vector length does not match matrix");
        std::vector<R> out(rows_, zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!is_zero((*this)(i, j)) && !is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
            }
        return out;
    }

    Matrix scaled(const R& s) const {
        Matrix r = *this;
        for (auto& x : r.data_) x = s * x;
        return r;
    }

    Matrix pow(unsigned long e) const {
        if (!is_square()) throw Error(ErrorKind::arity_mismatch, "power of a non-square matrix");
        Matrix result = identity(rows_, zero());
        Matrix base = *this;
        while (e > 0) {
            if (e & 1UL) result = result * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return result;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_identity() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const R& x = (*this)(i, j);
                if (i == j ? !(x == one_like(x)) : !is_zero(x)) return false;
            }
        return true;
    }
    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !is_zero((*this)(i, j))) return false;
        return true;
    }
    // Returns c when this equals c*I.
    std::optional<R> scalar_value() const {
        if (!is_square() || rows_ == 0 || !is_diagonal()) return std::nullopt;
        for (std::size_t i = 1; i < rows_; ++i)
            if (!((*this)(i, i) == (*this)(0, 0))) return std::nullopt;
        return (*this)(0, 0);
    }

    // Sample element carrying the ring context (conductor, modulus, arity, ...).
    R zero() const {
        if (data_.empty()) throw Error(ErrorKind::domain_error, "empty matrix has no ring context");
        return zero_like(data_.front());
    }

    const std::vector<R>& data() const noexcept { return data_; }

    Matrix(std::size_t rows, std::size_t cols, std::vector<R> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {}

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::arity_mismatch, "matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> data_;
};

template <class R>
Matrix<R>::Matrix(std::vector<std::vector<R>> rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    data_.reserve(rows_ * cols_);
    for (auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::arity_mismatch, "ragged matrix rows");
        for (auto& x : r) data_.push_back(std::move(x));
    }
}

template <class R>
Matrix<R> Matrix<R>::diagonal(const std::vector<R>& entries) {
    if (entries.empty()) throw Error(ErrorKind::arity_mismatch, "empty diagonal");
    Matrix m(entries.size(), entries.size(), zero_like(entries.front()));
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

// Block-diagonal sum of square blocks.
template <class R>
Matrix<R> block_diagonal(const std::vector<Matrix<R>>& blocks) {
    if (blocks.empty()) throw Error(ErrorKind::arity_mismatch, "no blocks");
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    Matrix<R> m(n, n, blocks.front().zero());
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(offset + i, offset + j) = b(i, j);
        offset += b.rows();
    }
    return m;
}

// ---- field algorithms --------------------------------------------------------

// Reduced row echelon form in place; returns the pivot columns.
template <class R>
std::vector<std::size_t> row_reduce(Matrix<R>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
        const R inv = one_like(m(r, c)) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const R factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class R>
std::size_t rank(Matrix<R> m) {
    return row_reduce(m).size();
}

// Basis of {x : m x = 0}, one vector per free column, in RREF normalisation.
template <class R>
std::vector<std::vector<R>> kernel_basis(Matrix<R> m) {
    const R zero = m.zero();
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<R>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<R> v(m.cols(), zero);
        v[free] = one_like(zero);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class R>
R determinant(Matrix<R> m) {
    if (!m.is_square()) throw Error(ErrorKind::arity_mismatch, "determinant of a non-square matrix");
    R det = one_like(m.zero());
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && is_zero(m(pivot, c))) ++pivot;
        if (pivot == n) return zero_like(det);
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
            det = -det;
        }
        det = det * m(c, c);
        const R inv = one_like(det) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            const R factor = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) {
                if (!is_zero(m(c, j))) m(i, j) -= factor * m(c, j);
            }
        }
    }
    return det;
}

template <class R>
std::optional<Matrix<R>> inverse(const Matrix<R>& m) {
    if (!m.is_square()) throw Error(ErrorKind::arity_mismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<R> aug(n, 2 * n, m.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = one_like(m.zero());
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<R> inv(n, n, m.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// A solution of m x = b, if the system is consistent.
template <class R>
std::optional<std::vector<R>> solve(const Matrix<R>& m, const std::vector<R>& b) {
    if (b.size() != m.rows()) throw Error(ErrorKind::arity_mismatch, "right-hand side length mismatch");
    Matrix<R> aug(m.rows(), m.cols() + 1, m.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<R> x(m.cols(), m.zero());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
    return x;
}

}  // namespace abelaut
