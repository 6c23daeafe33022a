#include "eislat/hermitian.hpp"

#include "eislat/linalg.hpp"
#include "eislat/zlattice.hpp"

#include <sstream>
#include <stdexcept>

namespace eislat {

EisensteinInt ip(const HermGram& g, const HermVector& x, const HermVector& y) {
    const std::size_t n = g.rank();
    if (x.size() != n || y.size() != n) throw std::invalid_argument("inner product dimension mismatch");
    EisensteinInt s;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        EisensteinInt row;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero() || g(i, j).is_zero()) continue;
            row += g(i, j) * y[j].conj();
        }
        s += x[i] * row;
    }
    return s;
}

HermGram chain(int n) {
    if (n < 1) throw std::invalid_argument("chain lattice needs n >= 1");
    const std::size_t m = static_cast<std::size_t>(n);
    Matrix<EisensteinInt> g(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        g(i, i) = 3;
        if (i + 1 < m) {
            g(i, i + 1) = EisensteinInt::theta();
            g(i + 1, i) = EisensteinInt::theta().conj();
        }
    }
    return HermGram(std::move(g));
}

HermGram e8e() { return chain(4); }

HermGram hyp() {
    Matrix<EisensteinInt> g(2, 2);
    g(0, 1) = EisensteinInt::theta();
    g(1, 0) = EisensteinInt::theta().conj();
    return HermGram(std::move(g));
}

HermGram diag(const std::vector<long>& entries) {
    Matrix<EisensteinInt> g(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
    return HermGram(std::move(g));
}

HermGram lambda10() { return direct_sum(direct_sum(e8e(), e8e()), hyp()); }

HermGram lambda() { return direct_sum(diag({3}), lambda10()); }

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

long parse_long(const std::string& s, const std::string& context) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + s + "' in lattice name '" + context + "'");
    }
    if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "' in lattice name '" + context + "'");
    return v;
}

HermGram named_piece(const std::string& raw) {
    const std::string name = trim(raw);
    if (name == "lambda") return lambda();
    if (name == "lambda10") return lambda10();
    if (name == "e8e") return e8e();
    if (name == "hyp") return hyp();
    const auto colon = name.find(':');
    if (colon != std::string::npos) {
        const std::string head = name.substr(0, colon);
        const std::string arg = name.substr(colon + 1);
        if (head == "chain") {
            const long n = parse_long(trim(arg), name);
            if (n < 1) throw std::invalid_argument("chain length must be positive: " + name);
            return chain(static_cast<int>(n));
        }
        if (head == "diag") {
            std::vector<long> entries;
            std::stringstream ss(arg);
            std::string item;
            while (std::getline(ss, item, ',')) entries.push_back(parse_long(trim(item), name));
            if (entries.empty()) throw std::invalid_argument("empty diagonal: " + name);
            return diag(entries);
        }
    }
    throw std::invalid_argument("unknown lattice name '" + name + "'");
}

}  // namespace

HermGram named_lattice(const std::string& spec) {
    std::stringstream ss(spec);
    std::string piece;
    HermGram out;
    bool first = true;
    while (std::getline(ss, piece, '+')) {
        HermGram g = named_piece(piece);
        out = first ? g : direct_sum(out, g);
        first = false;
    }
    if (first) throw std::invalid_argument("empty lattice name");
    return out;
}

namespace {

// <w^p e_i, w^q e_j> = w^(p-q) g_ij.
EisensteinInt basis_ip(const HermGram& g, std::size_t i, int p, std::size_t j, int q) {
    EisensteinInt v = g(i, j);
    for (int k = 0; k < ((p - q) % 3 + 3) % 3; ++k) v *= EisensteinInt::omega();
    return v;
}

}  // namespace

Matrix<mpq_class> real_form(const HermGram& g) {
    const std::size_t n = g.rank();
    Matrix<mpq_class> z(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) {
                    mpq_class v(basis_ip(g, i, p, j, q).twice_real(), 3);
                    v.canonicalize();
                    z(2 * i + p, 2 * j + q) = v;
                }
    return z;
}

ZGram z_realization(const HermGram& g) {
    const Matrix<mpq_class> r = real_form(g);
    Matrix<mpz_class> z(r.rows(), r.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) {
            if (r(i, j).get_den() != 1) {
                std::ostringstream os;
                os << "Z-realization entry (" << i << "," << j << ") = " << r(i, j) << " is not an integer";
                throw std::invalid_argument(os.str());
            }
            z(i, j) = r(i, j).get_num();
        }
    return ZGram(std::move(z));
}

Matrix<mpz_class> omega_matrix(std::size_t n) {
    Matrix<mpz_class> s(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        s(2 * i + 1, 2 * i) = 1;
        s(2 * i, 2 * i + 1) = -1;
        s(2 * i + 1, 2 * i + 1) = -1;
    }
    return s;
}

Inertia signature(const HermGram& g) {
    const Inertia z = inertia(real_form(g));
    return {z.positive / 2, z.radical / 2, z.negative / 2};
}

std::size_t form_rank(const HermGram& g) { return rank(to_field(g.matrix())); }

std::vector<HermVector> radical_basis(const HermGram& g) {
    std::vector<HermVector> out;
    for (const auto& v : nullspace(to_field(g.matrix().transpose()))) {
        mpz_class d = 1;
        for (const auto& x : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.denominator().get_mpz_t());
        HermVector e;
        for (const auto& x : v) e.push_back((x * QOmega(mpq_class(d))).to_eisenstein());
        out.push_back(primitive(e));
    }
    return out;
}

EisensteinInt det_e(const HermGram& g) { return determinant(g.matrix()); }

bool in_theta_dual(const HermGram& g) {
    for (const auto& x : g.matrix().data())
        if (!divides(EisensteinInt::theta(), x)) return false;
    return true;
}

bool theta_self_dual(const HermGram& g) {
    const EisensteinInt d = det_e(g);
    if (d.is_zero()) throw std::invalid_argument("theta self-duality of a singular form");
    if (!in_theta_dual(g)) return false;
    mpz_class target;
    mpz_ui_pow_ui(target.get_mpz_t(), 3, g.rank());
    return d.norm() == target;
}

std::string to_string(RootType t) { return t == RootType::Nodal ? "nodal" : "chordal"; }

EisensteinInt content(const HermVector& v) {
    EisensteinInt c;
    for (const auto& x : v)
        if (!x.is_zero()) c = c.is_zero() ? canonical_associate(x) : gcd(c, x);
    return c;
}

HermVector primitive(const HermVector& v) {
    const EisensteinInt c = content(v);
    if (c.is_zero()) return v;
    HermVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(exact_div(x, c));
    return out;
}

RootType root_classify(const HermGram& g, const HermVector& r) {
    if (!(ip(g, r, r) == EisensteinInt(3))) throw std::invalid_argument("not a root: <r,r> != 3");
    HermVector pairings;
    for (std::size_t i = 0; i < g.rank(); ++i) pairings.push_back(ip(g, r, unit_vector(g.rank(), i)));
    const EisensteinInt ideal = content(pairings);
    if (ideal == canonical_associate(EisensteinInt::theta())) return RootType::Nodal;
    if (ideal == EisensteinInt(3)) return RootType::Chordal;
    throw std::logic_error("root pairing ideal is neither theta E nor 3E: " + ideal.to_string());
}

bool is_isometry(const HermGram& g, const Matrix<EisensteinInt>& m) {
    if (!m.is_square() || m.rows() != g.rank()) return false;
    Matrix<EisensteinInt> mbar(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mbar(i, j) = m(i, j).conj();
    return m.transpose() * g.matrix() * mbar == g.matrix();
}

}  // namespace eislat
