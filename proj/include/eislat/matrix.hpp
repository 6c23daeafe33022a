#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eislat {

/// Dense row-major matrix over a commutative ring T.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }
    void set_col(std::size_t j, const std::vector<T>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        Matrix p(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& a = x(i, k);
                if (a == T{}) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += a * y(k, j);
            }
        return p;
    }
    friend Matrix operator+(Matrix x, const Matrix& y) {
        x.check_same(y);
        for (std::size_t i = 0; i < x.data_.size(); ++i) x.data_[i] += y.data_[i];
        return x;
    }
    friend Matrix operator-(Matrix x, const Matrix& y) {
        x.check_same(y);
        for (std::size_t i = 0; i < x.data_.size(); ++i) x.data_[i] -= y.data_[i];
        return x;
    }
    friend std::vector<T> operator*(const Matrix& m, const std::vector<T>& v) {
        if (m.cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
        std::vector<T> out(m.rows_);
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) out[i] += m(i, j) * v[j];
        return out;
    }
    Matrix scaled(const T& s) const {
        Matrix r = *this;
        for (auto& e : r.data_) e *= s;
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

    const std::vector<T>& data() const { return data_; }

    /// Block-diagonal sum.
    friend Matrix direct_sum(const Matrix& x, const Matrix& y) {
        Matrix s(x.rows_ + y.rows_, x.cols_ + y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) s(i, j) = x(i, j);
        for (std::size_t i = 0; i < y.rows_; ++i)
            for (std::size_t j = 0; j < y.cols_; ++j) s(x.rows_ + i, x.cols_ + j) = y(i, j);
        return s;
    }

private:
    void check_same(const Matrix& y) const {
        if (rows_ != y.rows_ || cols_ != y.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> matrix_power(const Matrix<T>& m, unsigned long k) {
    Matrix<T> result = Matrix<T>::identity(m.rows());
    Matrix<T> base = m;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

}  // namespace eislat
