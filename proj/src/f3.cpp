#include "eislat/f3.hpp"

#include "eislat/linalg.hpp"
#include "eislat/monodromy.hpp"

#include <stdexcept>

namespace eislat {

F3QuadSpace diagonal_space(const std::vector<int>& entries) {
    F3QuadSpace s;
    s.k = entries.size();
    s.q = Matrix<F3>(s.k, s.k);
    for (std::size_t i = 0; i < s.k; ++i) s.q(i, i) = F3(entries[i]);
    return s;
}

F3 quad_pair(const F3QuadSpace& s, const F3Vector& v, const F3Vector& w) {
    if (v.size() != s.k || w.size() != s.k) throw std::invalid_argument("vector length does not match the space");
    F3 r;
    for (std::size_t i = 0; i < s.k; ++i)
        for (std::size_t j = 0; j < s.k; ++j) r += v[i] * s.q(i, j) * w[j];
    return r;
}

F3 quad_norm(const F3QuadSpace& s, const F3Vector& v) { return quad_pair(s, v, v); }

namespace {

QOmega ipq(const HermGram& g, const QVector& x, const QVector& y) {
    QOmega s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        QOmega row;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero() && !g(i, j).is_zero()) row += QOmega(g(i, j)) * y[j].conj();
        s += x[i] * row;
    }
    return s;
}

QVector unit_q(std::size_t n, std::size_t i) {
    QVector v(n);
    v[i] = 1;
    return v;
}

}  // namespace

F3QuadSpace disc_group(const HermGram& n) {
    const std::size_t dim = n.rank();
    if (det_e(n).is_zero()) throw std::invalid_argument("discriminant group of a degenerate lattice");
    if (!in_theta_dual(n)) throw std::invalid_argument("lattice is not contained in its theta-dual");

    // theta N* = H^{-1} E^n with H = G^T / theta, and N corresponds to H E^n.
    Matrix<EisensteinInt> h(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) h(i, j) = exact_div(n(j, i), EisensteinInt::theta());
    const auto hinv = inverse(to_field(h));
    if (!hinv) throw std::logic_error("nonsingular Gram gave a singular reduction");
    for (const auto& x : hinv->data())
        if (!(x * QOmega(EisensteinInt::theta())).is_integral())
            throw std::invalid_argument("theta does not annihilate theta N*/N");

    // Quotient F_3^n / image(H mod theta); complement from standard vectors.
    const Matrix<F3> hmod = f3_reduce(h);
    std::vector<F3Vector> span;
    for (std::size_t j = 0; j < dim; ++j) span.push_back(hmod.col(j));
    F3QuadSpace s;
    std::vector<std::size_t> picks;
    for (std::size_t i = 0; i < dim; ++i) {
        F3Vector e(dim);
        e[i] = 1;
        if (in_span(span, e)) continue;
        span.push_back(e);
        picks.push_back(i);
    }
    s.k = picks.size();
    for (const auto i : picks) s.basis_lift.push_back(hinv->col(i));
    s.q = Matrix<F3>(s.k, s.k);
    for (std::size_t a = 0; a < s.k; ++a)
        for (std::size_t b = 0; b < s.k; ++b) {
            const QOmega v = ipq(n, s.basis_lift[a], s.basis_lift[b]);
            if (!v.is_integral()) throw std::logic_error("discriminant form value is not integral");
            s.q(a, b) = reduce_mod_theta(v.to_eisenstein());
        }
    return s;
}

std::vector<F3Vector> enumerate_norm(const F3QuadSpace& s, F3 c) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < s.k; ++i) total *= 3;
    std::vector<F3Vector> out;
    for (std::size_t code = 0; code < total; ++code) {
        F3Vector v(s.k);
        std::size_t rest = code;
        for (std::size_t i = s.k; i > 0; --i) {
            v[i - 1] = F3(static_cast<int>(rest % 3) - 1);
            rest /= 3;
        }
        if (quad_norm(s, v) == c) out.push_back(std::move(v));
    }
    return out;
}

F3Vector normalize_line(F3Vector v) {
    for (const auto& x : v)
        if (!x.is_zero()) {
            const F3 inv = x.inverse();
            for (auto& y : v) y *= inv;
            break;
        }
    return v;
}

std::vector<F3Vector> isotropic_lines(const F3QuadSpace& s, const std::optional<F3Vector>& orth_to,
                                      const std::optional<F3Vector>& not_orth_to) {
    std::vector<F3Vector> out;
    for (const auto& v : enumerate_norm(s, F3(0))) {
        bool zero = true;
        for (const auto& x : v) zero = zero && x.is_zero();
        if (zero || !(normalize_line(v) == v)) continue;
        if (orth_to && !quad_pair(s, v, *orth_to).is_zero()) continue;
        if (not_orth_to && quad_pair(s, v, *not_orth_to).is_zero()) continue;
        out.push_back(v);
    }
    return out;
}

SubLattice span_lattice(const HermGram& ambient, const std::vector<QVector>& gens) {
    SubLattice out;
    out.basis = module_basis(gens);
    const std::size_t r = out.basis.size();
    Matrix<EisensteinInt> g(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const QOmega v = ipq(ambient, out.basis[i], out.basis[j]);
            if (!v.is_integral()) throw std::invalid_argument("span is not an integral lattice");
            g(i, j) = v.to_eisenstein();
        }
    out.gram = HermGram(std::move(g));
    return out;
}

SubLattice glue(const HermGram& n, const F3Vector& line) {
    const F3QuadSpace s = disc_group(n);
    if (line.size() != s.k) throw std::invalid_argument("line length does not match the discriminant group");
    if (!quad_norm(s, line).is_zero()) throw std::invalid_argument("gluing along a non-isotropic line");
    std::vector<QVector> gens;
    for (std::size_t i = 0; i < n.rank(); ++i) gens.push_back(unit_q(n.rank(), i));
    QVector extra(n.rank());
    for (std::size_t a = 0; a < s.k; ++a) {
        const QOmega c(lift(line[a]));
        for (std::size_t i = 0; i < n.rank(); ++i) extra[i] += c * s.basis_lift[a][i];
    }
    gens.push_back(extra);
    return span_lattice(n, gens);
}

SubLattice hyperplane_preimage(const HermGram& g, const F3Vector& f) {
    const std::size_t n = g.rank();
    if (f.size() != n) throw std::invalid_argument("functional length does not match the lattice rank");
    bool zero = true;
    for (const auto& x : f) zero = zero && x.is_zero();
    if (zero) throw std::invalid_argument("the zero functional does not define a hyperplane");
    std::vector<QVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
        QVector v(n);
        v[i] = QOmega(EisensteinInt::theta());
        gens.push_back(v);
    }
    Matrix<F3> row(1, n);
    for (std::size_t i = 0; i < n; ++i) row(0, i) = f[i];
    for (const auto& k : nullspace(row)) {
        QVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = QOmega(lift(k[i]));
        gens.push_back(v);
    }
    return span_lattice(g, gens);
}

namespace {

std::size_t encode(const F3Vector& v) {
    std::size_t c = 0;
    for (const auto& x : v) c = 3 * c + static_cast<std::size_t>(x.value());
    return c;
}

std::size_t power3(std::size_t n) {
    if (n > 16) throw std::invalid_argument("F3 space too large for orbit enumeration");
    std::size_t p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= 3;
    return p;
}

std::vector<F3Vector> reduced_roots(const std::vector<HermVector>& roots) {
    std::vector<F3Vector> out;
    for (const auto& r : roots) {
        F3Vector v;
        for (const auto& x : r) v.push_back(reduce_mod_theta(x));
        out.push_back(v);
    }
    return out;
}

std::size_t orbit_size(const Matrix<F3>& a, const std::vector<F3Vector>& gens, const F3Vector& start) {
    const std::size_t n = a.rows();
    std::vector<std::uint8_t> seen(power3(n), 0);
    std::vector<F3Vector> queue{normalize_line(start)};
    seen[encode(queue.front())] = 1;
    // Pairing rows: (u, v) = u . (A v).
    std::vector<F3Vector> av;
    for (const auto& v : gens) {
        F3Vector w(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w[i] += a(i, j) * v[j];
        av.push_back(w);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const F3Vector& u = queue[head];
            F3 c;
            for (std::size_t i = 0; i < n; ++i) c += u[i] * av[g][i];
            if (c.is_zero()) continue;
            F3Vector img = u;
            for (std::size_t i = 0; i < n; ++i) img[i] += c * gens[g][i];
            img = normalize_line(img);
            const std::size_t code = encode(img);
            if (seen[code]) continue;
            seen[code] = 1;
            queue.push_back(std::move(img));
        }
    }
    return queue.size();
}

}  // namespace

std::size_t hyperplane_orbit(const std::vector<HermVector>& roots, const HermGram& g, const F3Vector& start) {
    if (start.size() != g.rank()) throw std::invalid_argument("start vector length does not match the lattice rank");
    bool zero = true;
    for (const auto& x : start) zero = zero && x.is_zero();
    if (zero) throw std::invalid_argument("a hyperplane needs a nonzero normal");
    for (const auto& r : roots)
        if (!(ip(g, r, r) == EisensteinInt(3))) throw std::invalid_argument("orbit generator is not a root");
    return orbit_size(symplectic_gram(g), reduced_roots(roots), start);
}

OrbitSearch grow_hyperplane_orbit(const HermGram& g, const F3Vector& start, std::size_t target) {
    const std::size_t n = g.rank();
    const Matrix<F3> a = symplectic_gram(g);
    std::vector<HermVector> candidates;
    for (std::size_t i = 0; i < n; ++i)
        if (g(i, i) == EisensteinInt(3)) candidates.push_back(unit_vector(n, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (int k = 0; k < 6; ++k) {
                HermVector v(n);
                v[i] = 1;
                v[j] = SixthRoot(k).value();
                if (ip(g, v, v) == EisensteinInt(3)) candidates.push_back(v);
            }
    OrbitSearch out;
    std::vector<F3Vector> reduced;
    for (const auto& r : candidates) {
        F3Vector v = normalize_line(reduced_roots({r}).front());
        bool dup = false;
        for (const auto& w : reduced) dup = dup || w == v;
        if (dup) continue;
        reduced.push_back(v);
        out.roots.push_back(r);
        out.orbit = orbit_size(a, reduced, start);
        if (out.orbit >= target) break;
    }
    out.generators = out.roots.size();
    return out;
}

}  // namespace eislat
