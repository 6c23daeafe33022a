#include "eislat/linalg.hpp"

#include <stdexcept>

namespace eislat {

Matrix<QOmega> to_field(const Matrix<EisensteinInt>& m) {
    Matrix<QOmega> f(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) f(i, j) = QOmega(m(i, j));
    return f;
}

Matrix<mpq_class> to_field(const Matrix<mpz_class>& m) {
    Matrix<mpq_class> f(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) f(i, j) = mpq_class(m(i, j));
    return f;
}

namespace {

mpz_class exact_quotient(const mpz_class& x, const mpz_class& d) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return q;
}

EisensteinInt exact_quotient(const EisensteinInt& x, const EisensteinInt& d) { return exact_div(x, d); }

bool is_zero(const mpz_class& x) { return x == 0; }
bool is_zero(const EisensteinInt& x) { return x.is_zero(); }

template <class T>
T bareiss(Matrix<T> m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && is_zero(m(p, k))) ++p;
        if (p == n) return T(0);
        if (p != k) {
            m.swap_rows(p, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = exact_quotient(num, prev);
            }
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    if (negate) det = -det;
    return det;
}

void row_axpy(Matrix<EisensteinInt>& m, std::size_t target, const EisensteinInt& q, std::size_t source) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(source, j).is_zero()) continue;
        m(target, j) -= q * m(source, j);
    }
}

}  // namespace

mpz_class determinant(Matrix<mpz_class> m) { return bareiss(std::move(m)); }
EisensteinInt determinant(Matrix<EisensteinInt> m) { return bareiss(std::move(m)); }

Matrix<EisensteinInt> hnf_rows(Matrix<EisensteinInt> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        bool found = false;
        for (;;) {
            // Smallest-norm nonzero entry in column c at or below row r, ties by index.
            std::size_t p = m.rows();
            mpz_class best;
            for (std::size_t i = r; i < m.rows(); ++i) {
                if (m(i, c).is_zero()) continue;
                mpz_class n = m(i, c).norm();
                if (p == m.rows() || n < best) {
                    p = i;
                    best = n;
                }
            }
            if (p == m.rows()) break;
            found = true;
            m.swap_rows(p, r);
            bool remaining = false;
            for (std::size_t i = r + 1; i < m.rows(); ++i) {
                if (m(i, c).is_zero()) continue;
                auto q = divmod(m(i, c), m(r, c)).first;
                row_axpy(m, i, q, r);
                if (!m(i, c).is_zero()) remaining = true;
            }
            if (!remaining) break;
        }
        if (!found) continue;
        const EisensteinInt u = unit_to_canonical(m(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= u;
        for (std::size_t i = 0; i < r; ++i) {
            if (m(i, c).is_zero()) continue;
            auto q = divmod(m(i, c), m(r, c)).first;
            if (!q.is_zero()) row_axpy(m, i, q, r);
        }
        ++r;
    }
    Matrix<EisensteinInt> out(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

std::vector<std::vector<QOmega>> module_basis(const std::vector<std::vector<QOmega>>& gens) {
    if (gens.empty()) return {};
    const std::size_t n = gens.front().size();
    mpz_class d = 1;
    for (const auto& v : gens)
        for (const auto& x : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.denominator().get_mpz_t());
    Matrix<EisensteinInt> m(gens.size(), n);
    const QOmega scale{mpq_class(d)};
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = (gens[i][j] * scale).to_eisenstein();
    const Matrix<EisensteinInt> h = hnf_rows(std::move(m));
    const QOmega inv{mpq_class(mpz_class(1), d)};
    std::vector<std::vector<QOmega>> basis(h.rows(), std::vector<QOmega>(n));
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) basis[i][j] = QOmega(h(i, j)) * inv;
    return basis;
}

}  // namespace eislat
