#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace uniton {

/// Dense row-major matrix over a field-like scalar.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_columns(size_t rows, const std::vector<std::vector<T>>& cols) {
        Matrix m(rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
            for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> column(size_t j) const {
        std::vector<T> v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_column(size_t j, const std::vector<T>& v) {
        for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    Matrix adjoint() const {
        Matrix m(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                using std::conj;
                m(j, i) = conj((*this)(i, j));
            }
        return m;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.a_) x = -x;
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (is_zero_scalar(x)) continue;
                for (size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<T> out(a.rows_, T(0));
        for (size_t k = 0; k < a.cols_; ++k) {
            if (is_zero_scalar(v[k])) continue;
            for (size_t i = 0; i < a.rows_; ++i) out[i] += a(i, k) * v[k];
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Horizontal concatenation.
    friend Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ == 0) return b;
        if (b.cols_ == 0) return a;
        if (a.rows_ != b.rows_) throw std::invalid_argument("hstack row mismatch");
        Matrix m(a.rows_, a.cols_ + b.cols_);
        for (size_t i = 0; i < a.rows_; ++i) {
            for (size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
            for (size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
        }
        return m;
    }

    Matrix select_columns(const std::vector<size_t>& idx) const {
        Matrix m(rows_, idx.size());
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

private:
    static bool is_zero_scalar(const T& x) { return x == T(0); }
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> a_;
};

}  // namespace uniton
