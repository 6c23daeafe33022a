#pragma once

// Exact linear algebra: Gaussian elimination over the fields Q, Q(w), F_3,
// fraction-free determinants over Z and E, and Hermite normal form over E.

#include "eislat/eisenstein.hpp"
#include "eislat/matrix.hpp"
#include "eislat/qomega.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace eislat {

inline mpq_class field_inverse(const mpq_class& x) { return 1 / x; }
inline QOmega field_inverse(const QOmega& x) { return x.inverse(); }
inline F3 field_inverse(F3 x) { return x.inverse(); }

/// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == T{}) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const T inv = field_inverse(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == T{}) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
    return rref(m).size();
}

/// Basis of {x : m x = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.cols());
        v[f] = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solution of a x = b when one exists (any one, free variables zero).
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
    Matrix<T> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<T> x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
    return x;
}

/// Inverse of a square matrix, or nullopt when singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
    const std::size_t n = a.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = T(1);
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// True when v lies in the span of the given vectors.
template <class T>
bool in_span(const std::vector<std::vector<T>>& vectors, const std::vector<T>& v) {
    if (vectors.empty()) {
        for (const auto& x : v)
            if (!(x == T{})) return false;
        return true;
    }
    Matrix<T> a(v.size(), vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) a.set_col(j, vectors[j]);
    return solve(a, v).has_value();
}

Matrix<QOmega> to_field(const Matrix<EisensteinInt>& m);
Matrix<mpq_class> to_field(const Matrix<mpz_class>& m);

/// Fraction-free (Bareiss) determinant.
mpz_class determinant(Matrix<mpz_class> m);
EisensteinInt determinant(Matrix<EisensteinInt> m);

/// Row Hermite normal form over E of the row module spanned by `gens`: an upper
/// echelon basis whose pivots are canonical associates, with entries above each
/// pivot reduced by Euclidean division. Zero rows are dropped.
Matrix<EisensteinInt> hnf_rows(Matrix<EisensteinInt> gens);

/// E-basis (rows, in coordinates) of the E-module generated by rational vectors.
/// Denominators are cleared, the HNF is taken, and the result is rescaled.
std::vector<std::vector<QOmega>> module_basis(const std::vector<std::vector<QOmega>>& gens);

}  // namespace eislat
