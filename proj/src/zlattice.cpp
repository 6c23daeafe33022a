#include "eislat/zlattice.hpp"

#include "eislat/linalg.hpp"

#include <stdexcept>

namespace eislat {

namespace {

// Removes rows/columns listed in `drop` (sorted ascending).
Matrix<mpq_class> without(const Matrix<mpq_class>& a, const std::vector<std::size_t>& drop) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0, d = 0; i < a.rows(); ++i) {
        if (d < drop.size() && drop[d] == i) {
            ++d;
            continue;
        }
        keep.push_back(i);
    }
    Matrix<mpq_class> out(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = a(keep[i], keep[j]);
    return out;
}

}  // namespace

Inertia inertia(const ZGram& g) { return inertia(to_field(g.matrix())); }

Inertia inertia(Matrix<mpq_class> a) {
    if (!a.is_square()) throw std::invalid_argument("inertia of a non-square matrix");
    Inertia s;
    while (a.rows() > 0) {
        const std::size_t n = a.rows();
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (a(i, i) != 0) {
                p = i;
                break;
            }
        if (p < n) {
            const mpq_class d = a(p, p);
            (d > 0 ? s.positive : s.negative) += 1;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == p || a(i, p) == 0) continue;
                const mpq_class f = a(i, p) / d;
                for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(p, j);
            }
            a = without(a, {p});
            continue;
        }
        std::size_t pi = n, pj = n;
        for (std::size_t i = 0; i < n && pi == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (a(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n) {
            s.radical += n;
            break;
        }
        // Hyperbolic block [[0,b],[b,0]] has inertia (1,0,1); eliminate it.
        s.positive += 1;
        s.negative += 1;
        const mpq_class b = a(pi, pj);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == pi || k == pj) continue;
            // Row k minus (a_k,pj / b) row pi minus (a_k,pi / b) row pj, using [[0,b],[b,0]]^{-1}.
            const mpq_class fi = a(k, pj) / b;
            const mpq_class fj = a(k, pi) / b;
            for (std::size_t j = 0; j < n; ++j) a(k, j) -= fi * a(pi, j) + fj * a(pj, j);
        }
        a = without(a, {pi, pj});
    }
    return s;
}

mpz_class determinant(const ZGram& g) { return determinant(g.matrix()); }

bool is_even(const ZGram& g) {
    for (std::size_t i = 0; i < g.rank(); ++i)
        if (mpz_odd_p(g(i, i).get_mpz_t())) return false;
    return true;
}

ZGram an_vanishing_gram(int n) {
    if (n < 1) throw std::invalid_argument("vanishing lattice needs n >= 1");
    const std::size_t m = static_cast<std::size_t>(n);
    Matrix<mpz_class> g(2 * m, 2 * m);
    auto set = [&](std::size_t i, std::size_t j, long v) {
        g(i, j) = v;
        g(j, i) = v;
    };
    for (std::size_t i = 0; i < m; ++i) {
        set(i, i, 2);
        set(m + i, m + i, 2);
        if (i + 1 < m) {
            set(i, i + 1, -1);
            set(m + i, m + i + 1, -1);
        }
        set(i, m + i, -1);
        if (i >= 1) set(i, m + i - 1, 1);
    }
    return ZGram(std::move(g));
}

ZGram tensor_gram(const ZGram& g, const ZGram& h) {
    const std::size_t a = g.rank(), b = h.rank();
    Matrix<mpz_class> k(a * b, a * b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j)
            for (std::size_t p = 0; p < b; ++p)
                for (std::size_t q = 0; q < b; ++q) k(i * b + p, j * b + q) = g(i, j) * h(p, q);
    return ZGram(std::move(k));
}

ZGram e8_gram() {
    Matrix<mpz_class> g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
    const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (const auto& e : edges) {
        g(e[0], e[1]) = -1;
        g(e[1], e[0]) = -1;
    }
    return ZGram(std::move(g));
}

ZGram an_root_gram(int n) {
    if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
    const std::size_t m = static_cast<std::size_t>(n);
    Matrix<mpz_class> g(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        g(i, i) = 2;
        if (i + 1 < m) g(i, i + 1) = g(i + 1, i) = -1;
    }
    return ZGram(std::move(g));
}

namespace {

ZVector act(const Matrix<mpz_class>& m, const ZVector& v) { return m * v; }

mpz_class dot(const Matrix<mpz_class>& g, const ZVector& x, const ZVector& y) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g(i, j) * y[j];
    }
    return s;
}

void check_order_three(const Matrix<mpz_class>& s) {
    if (!s.is_square()) throw std::invalid_argument("w-action matrix must be square");
    const std::size_t m = s.rows();
    if (m % 2 != 0) throw std::invalid_argument("E-module structure needs even Z-rank");
    if (!(matrix_power(s, 3) == Matrix<mpz_class>::identity(m)))
        throw std::invalid_argument("w-action matrix does not satisfy s^3 = 1");
    if (determinant(s - Matrix<mpz_class>::identity(m)) == 0)
        throw std::invalid_argument("w-action matrix fixes a nonzero vector");
}

}  // namespace

std::vector<ZVector> eisenstein_basis(const Matrix<mpz_class>& s) {
    check_order_three(s);
    const std::size_t m = s.rows();
    const std::size_t n = m / 2;

    // Greedy E-independent picks among standard basis vectors, index order.
    std::vector<ZVector> picks;
    std::vector<std::vector<mpq_class>> span;
    for (std::size_t idx = 0; idx < m && picks.size() < n; ++idx) {
        ZVector e(m);
        e[idx] = 1;
        std::vector<mpq_class> eq(e.begin(), e.end());
        if (in_span(span, eq)) continue;
        ZVector se = act(s, e);
        picks.push_back(e);
        span.push_back(eq);
        span.emplace_back(se.begin(), se.end());
    }
    if (picks.size() != n) throw std::logic_error("E-basis extraction failed");

    // Columns v1, s v1, v2, s v2, ...: Q-coordinates of each e_j give E-coordinates.
    Matrix<mpq_class> b(m, m);
    for (std::size_t k = 0; k < n; ++k) {
        ZVector sv = act(s, picks[k]);
        for (std::size_t i = 0; i < m; ++i) {
            b(i, 2 * k) = picks[k][i];
            b(i, 2 * k + 1) = sv[i];
        }
    }
    const auto binv = inverse(b);
    if (!binv) throw std::logic_error("E-basis extraction failed");
    std::vector<std::vector<QOmega>> gens;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<QOmega> row(n);
        for (std::size_t k = 0; k < n; ++k) row[k] = QOmega((*binv)(2 * k, j), (*binv)(2 * k + 1, j));
        gens.push_back(std::move(row));
    }
    const auto h = module_basis(gens);
    if (h.size() != n) throw std::logic_error("E-basis extraction failed");

    std::vector<ZVector> basis;
    for (const auto& row : h) {
        std::vector<mpq_class> v(m);
        for (std::size_t k = 0; k < n; ++k) {
            ZVector sv = act(s, picks[k]);
            for (std::size_t i = 0; i < m; ++i) v[i] += row[k].a() * picks[k][i] + row[k].b() * sv[i];
        }
        ZVector z(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (v[i].get_den() != 1) throw std::logic_error("E-basis vector is not integral");
            z[i] = v[i].get_num();
        }
        basis.push_back(std::move(z));
    }
    return basis;
}

HermGram hermitian_from_z(const ZGram& g, const Matrix<mpz_class>& s) {
    if (s.rows() != g.rank()) throw std::invalid_argument("w-action and Gram sizes differ");
    if (!(s.transpose() * g.matrix() * s == g.matrix()))
        throw std::invalid_argument("w-action matrix is not an isometry of the Gram matrix");
    const auto basis = eisenstein_basis(s);
    const Matrix<mpz_class> s_inv = s * s;
    const Matrix<mpz_class> diff = s_inv - s;
    const std::size_t n = basis.size();
    Matrix<EisensteinInt> h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const mpz_class p = dot(g.matrix(), basis[i], basis[j]);
            const mpz_class q = dot(g.matrix(), basis[i], diff * basis[j]);
            const mpz_class re2 = 3 * p - q;
            if (mpz_odd_p(re2.get_mpz_t()))
                throw std::invalid_argument("Hermitian form takes a value outside E");
            h(i, j) = EisensteinInt(mpz_class(re2 / 2), mpz_class(-q));
        }
    return HermGram(std::move(h));
}

}  // namespace eislat
