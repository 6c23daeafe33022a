#include "eislat/monodromy.hpp"

#include "eislat/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace eislat {

Ambient make_ambient(HermGram g) { return std::make_shared<const HermGram>(std::move(g)); }

GroupElt::GroupElt(Ambient ambient, Matrix<EisensteinInt> m) : ambient_(std::move(ambient)), m_(std::move(m)) {
    if (!ambient_) throw std::invalid_argument("group element without an ambient lattice");
    if (!m_.is_square() || m_.rows() != ambient_->rank())
        throw std::invalid_argument("group element size does not match the ambient rank");
}

GroupElt GroupElt::identity(Ambient ambient) {
    const std::size_t n = ambient->rank();
    return GroupElt(std::move(ambient), Matrix<EisensteinInt>::identity(n));
}

bool GroupElt::is_identity() const { return m_ == Matrix<EisensteinInt>::identity(dim()); }

bool GroupElt::same_ambient(const GroupElt& o) const {
    return ambient_ == o.ambient_ || *ambient_ == *o.ambient_;
}

GroupElt GroupElt::operator*(const GroupElt& o) const {
    if (!same_ambient(o)) throw std::invalid_argument("product of group elements on different lattices");
    return GroupElt(ambient_, m_ * o.m_);
}

GroupElt GroupElt::pow(unsigned long k) const { return GroupElt(ambient_, matrix_power(m_, k)); }

namespace {

HermVector gram_times_conj(const HermGram& g, const HermVector& r) {
    HermVector h(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
        for (std::size_t j = 0; j < g.rank(); ++j)
            if (!g(i, j).is_zero() && !r[j].is_zero()) h[i] += g(i, j) * r[j].conj();
    return h;
}

// Matrix with column j equal to e_j - c_j v.
Matrix<EisensteinInt> rank_one_update(const HermVector& c, const HermVector& v) {
    const std::size_t n = v.size();
    Matrix<EisensteinInt> m = Matrix<EisensteinInt>::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!c[j].is_zero()) m(i, j) -= c[j] * v[i];
    }
    return m;
}

}  // namespace

GroupElt reflection(const Ambient& g, const HermVector& r, SixthRoot zeta) {
    if (r.size() != g->rank()) throw std::invalid_argument("root length does not match the lattice rank");
    const EisensteinInt rr = ip(*g, r, r);
    if (rr.is_zero()) throw std::invalid_argument("reflection in an isotropic vector");
    const EisensteinInt one_minus = EisensteinInt(1) - zeta.value();
    // <e_j, r> is the j-th entry of G conj(r).
    const HermVector pair = gram_times_conj(*g, r);
    HermVector c(pair.size());
    for (std::size_t j = 0; j < pair.size(); ++j) {
        const EisensteinInt num = one_minus * pair[j];
        if (!divides(rr, num))
            throw std::invalid_argument("reflection matrix entry is not in E (the lattice is not preserved)");
        c[j] = exact_div(num, rr);
    }
    return GroupElt(g, rank_one_update(c, r));
}

GroupElt transvection(const Ambient& g, const HermVector& xi) {
    if (xi.size() != g->rank()) throw std::invalid_argument("vector length does not match the lattice rank");
    if (!ip(*g, xi, xi).is_zero()) throw std::invalid_argument("transvection vector is not isotropic");
    const HermVector pair = gram_times_conj(*g, xi);
    HermVector c(pair.size());
    for (std::size_t j = 0; j < pair.size(); ++j) {
        if (!divides(EisensteinInt::theta(), pair[j]))
            throw std::invalid_argument("transvection matrix entry is not in E");
        c[j] = exact_div(pair[j], EisensteinInt::theta());
    }
    return GroupElt(g, rank_one_update(c, xi));
}

GroupElt word_eval(const Ambient& g, const std::vector<GroupElt>& factors) {
    GroupElt p = GroupElt::identity(g);
    for (const auto& f : factors) p = p * f;
    return p;
}

std::string OrderResult::to_string() const {
    switch (kind) {
        case Kind::Finite: return std::to_string(value);
        case Kind::Infinite: return "infinite";
        case Kind::Unknown: break;
    }
    return "unknown(>" + std::to_string(value) + ")";
}

namespace {

bool unipotent(const Matrix<EisensteinInt>& m) {
    const std::size_t n = m.rows();
    const Matrix<EisensteinInt> d = m - Matrix<EisensteinInt>::identity(n);
    return matrix_power(d, n) == Matrix<EisensteinInt>(n, n);
}

std::vector<std::vector<QOmega>> radical_span(const HermGram& g) {
    std::vector<std::vector<QOmega>> out;
    for (const auto& v : radical_basis(g)) out.emplace_back(v.begin(), v.end());
    return out;
}

bool scalar_modulo(const Matrix<EisensteinInt>& m, const EisensteinInt& u,
                   const std::vector<std::vector<QOmega>>* radical) {
    const std::size_t n = m.rows();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<QOmega> col(n);
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            EisensteinInt x = m(i, j);
            if (i == j) x -= u;
            zero = zero && x.is_zero();
            col[i] = QOmega(x);
        }
        if (zero) continue;
        if (radical == nullptr || !in_span(*radical, col)) return false;
    }
    return true;
}

std::optional<SixthRoot> scalar_with(const Matrix<EisensteinInt>& m,
                                     const std::vector<std::vector<QOmega>>* radical) {
    for (int k = 0; k < 6; ++k)
        if (scalar_modulo(m, SixthRoot(k).value(), radical)) return SixthRoot(k);
    return std::nullopt;
}

}  // namespace

OrderResult order(const GroupElt& m, unsigned long cap) {
    if (cap == 0) throw std::invalid_argument("order cap must be positive");
    if (m.is_identity()) return OrderResult::finite(1);
    if (unipotent(m.matrix())) return OrderResult::infinite();
    Matrix<EisensteinInt> p = m.matrix();
    const auto id = Matrix<EisensteinInt>::identity(m.dim());
    for (unsigned long k = 2; k <= cap; ++k) {
        p = p * m.matrix();
        if (p == id) return OrderResult::finite(k);
    }
    return OrderResult::unknown(cap);
}

std::optional<SixthRoot> scalar_of(const GroupElt& m, bool modulo_radical) {
    if (!modulo_radical) return scalar_with(m.matrix(), nullptr);
    const auto rad = radical_span(m.ambient());
    return scalar_with(m.matrix(), &rad);
}

OrderResult projective_order(const GroupElt& m, bool modulo_radical, unsigned long cap) {
    if (cap == 0) throw std::invalid_argument("order cap must be positive");
    std::vector<std::vector<QOmega>> rad;
    if (modulo_radical) rad = radical_span(m.ambient());
    const auto* radp = modulo_radical ? &rad : nullptr;
    if (scalar_with(m.matrix(), radp)) return OrderResult::finite(1);
    // A unipotent map that is not the identity on the quotient has infinite order there.
    if (unipotent(m.matrix())) return OrderResult::infinite();
    Matrix<EisensteinInt> p = m.matrix();
    for (unsigned long k = 2; k <= cap; ++k) {
        p = p * m.matrix();
        if (scalar_with(p, radp)) return OrderResult::finite(k);
    }
    return OrderResult::unknown(cap);
}

std::vector<GroupElt> basis_triflections(const Ambient& g) {
    std::vector<GroupElt> out;
    for (std::size_t i = 0; i < g->rank(); ++i)
        out.push_back(reflection(g, unit_vector(g->rank(), i), SixthRoot::omega()));
    return out;
}

GroupElt central_word(int n) {
    const Ambient g = make_ambient(chain(n));
    return word_eval(g, basis_triflections(g)).pow(static_cast<unsigned long>(n) + 1);
}

SixthRoot central_word_scalar(int n) {
    if (det_e(chain(n)).is_zero())
        throw std::invalid_argument("chain(" + std::to_string(n) + ") is degenerate");
    const auto s = scalar_of(central_word(n), false);
    if (!s) throw NotScalar("central word on chain(" + std::to_string(n) + ") is not scalar");
    return *s;
}

std::string to_string(BraidRelation b) {
    switch (b) {
        case BraidRelation::Braid: return "braid";
        case BraidRelation::Commute: return "commute";
        case BraidRelation::Neither: break;
    }
    return "neither";
}

BraidRelation braid_check(const GroupElt& a, const GroupElt& b) {
    const GroupElt ab = a * b;
    const GroupElt ba = b * a;
    if (ab == ba) return BraidRelation::Commute;
    if (ab * a == b * a * b) return BraidRelation::Braid;
    return BraidRelation::Neither;
}

// Finite groups

std::size_t default_closure_cap() {
    if (const char* env = std::getenv("EISLAT_CLOSURE_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 2000000;
}

FiniteGroup::FiniteGroup(Ambient ambient, std::size_t dim, std::vector<std::int64_t> packed)
    : ambient_(std::move(ambient)), dim_(dim), packed_(std::move(packed)) {}

GroupElt FiniteGroup::element(std::size_t i) const {
    const std::int64_t* p = raw(i);
    Matrix<EisensteinInt> m(dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) {
            const std::size_t k = 2 * (r * dim_ + c);
            m(r, c) = EisensteinInt(mpz_class(static_cast<long>(p[k])), mpz_class(static_cast<long>(p[k + 1])));
        }
    return GroupElt(ambient_, std::move(m));
}

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("group element entry overflow");
    return r;
}
std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("group element entry overflow");
    return r;
}

std::vector<std::int64_t> pack(const Matrix<EisensteinInt>& m) {
    std::vector<std::int64_t> out;
    out.reserve(2 * m.rows() * m.cols());
    for (const auto& x : m.data()) {
        if (!x.a().fits_slong_p() || !x.b().fits_slong_p())
            throw std::overflow_error("group generator entry exceeds 64 bits");
        out.push_back(x.a().get_si());
        out.push_back(x.b().get_si());
    }
    return out;
}

// out = x * y for packed n x n matrices.
void packed_mul(const std::int64_t* x, const std::int64_t* y, std::int64_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t a = 0, b = 0;
            for (std::size_t k = 0; k < n; ++k) {
                const std::int64_t xa = x[2 * (i * n + k)], xb = x[2 * (i * n + k) + 1];
                const std::int64_t ya = y[2 * (k * n + j)], yb = y[2 * (k * n + j) + 1];
                if ((xa | xb) == 0 || (ya | yb) == 0) continue;
                const std::int64_t bd = checked_mul(xb, yb);
                a = checked_add(a, checked_add(checked_mul(xa, ya), -bd));
                b = checked_add(b, checked_add(checked_add(checked_mul(xa, yb), checked_mul(xb, ya)), -bd));
            }
            out[2 * (i * n + j)] = a;
            out[2 * (i * n + j) + 1] = b;
        }
}

std::uint64_t hash_packed(const std::int64_t* p, std::size_t len) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < len; ++i) {
        std::uint64_t z = static_cast<std::uint64_t>(p[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        h ^= z ^ (z >> 31);
    }
    return h;
}

// Open-addressing set of element indices into a packed store.
class PackedSet {
public:
    explicit PackedSet(std::size_t len) : len_(len), slots_(1024, 0) {}

    // Appends p to store and returns true if it was not present.
    bool insert(std::vector<std::int64_t>& store, const std::int64_t* p) {
        if (2 * (count_ + 1) > slots_.size()) grow(store);
        std::size_t mask = slots_.size() - 1;
        std::size_t s = hash_packed(p, len_) & mask;
        while (slots_[s] != 0) {
            const std::int64_t* q = store.data() + (slots_[s] - 1) * len_;
            if (std::equal(p, p + len_, q)) return false;
            s = (s + 1) & mask;
        }
        store.insert(store.end(), p, p + len_);
        slots_[s] = ++count_;
        return true;
    }

private:
    void grow(const std::vector<std::int64_t>& store) {
        std::vector<std::size_t> fresh(slots_.size() * 2, 0);
        const std::size_t mask = fresh.size() - 1;
        for (std::size_t idx = 1; idx <= count_; ++idx) {
            std::size_t s = hash_packed(store.data() + (idx - 1) * len_, len_) & mask;
            while (fresh[s] != 0) s = (s + 1) & mask;
            fresh[s] = idx;
        }
        slots_.swap(fresh);
    }

    std::size_t len_;
    std::size_t count_ = 0;
    std::vector<std::size_t> slots_;
};

}  // namespace

FiniteGroup group_closure(const std::vector<GroupElt>& gens, std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("group closure needs at least one generator");
    const Ambient amb = gens.front().ambient_ptr();
    for (const auto& g : gens)
        if (!g.same_ambient(gens.front())) throw std::invalid_argument("generators act on different lattices");
    const std::size_t n = gens.front().dim();
    const std::size_t len = 2 * n * n;
    std::vector<std::vector<std::int64_t>> packed_gens;
    for (const auto& g : gens) packed_gens.push_back(pack(g.matrix()));

    std::vector<std::int64_t> store;
    PackedSet seen(len);
    const auto id = pack(Matrix<EisensteinInt>::identity(n));
    seen.insert(store, id.data());
    std::vector<std::int64_t> scratch(len);
    for (std::size_t idx = 0; idx * len < store.size(); ++idx) {
        for (const auto& g : packed_gens) {
            packed_mul(store.data() + idx * len, g.data(), scratch.data(), n);
            if (seen.insert(store, scratch.data()) && store.size() / len > cap)
                throw CapExceeded("group closure exceeded " + std::to_string(cap) + " elements");
        }
    }
    return FiniteGroup(amb, n, std::move(store));
}

HermVector line_normal_form(const HermVector& v) {
    HermVector p = primitive(v);
    for (const auto& x : p)
        if (!x.is_zero()) {
            const EisensteinInt u = unit_to_canonical(x);
            for (auto& y : p) y *= u;
            break;
        }
    return p;
}

namespace {

bool is_identity_packed(const std::int64_t* p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t k = 2 * (i * n + j);
            if (p[k] != (i == j ? 1 : 0) || p[k + 1] != 0) return false;
        }
    return true;
}

// g - I has rank exactly one: nonzero with all 2x2 minors vanishing.
bool rank_one_difference(const Matrix<EisensteinInt>& d) {
    const std::size_t n = d.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = j + 1; l < n; ++l)
                    if (!(d(i, j) * d(k, l) == d(i, l) * d(k, j))) return false;
    return true;
}

}  // namespace

std::vector<ReflectionInfo> reflections_in(const FiniteGroup& g) {
    std::vector<ReflectionInfo> out;
    const std::size_t n = g.dim();
    const auto id = Matrix<EisensteinInt>::identity(n);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (is_identity_packed(g.raw(i), n)) continue;
        const GroupElt e = g.element(i);
        const Matrix<EisensteinInt> d = e.matrix() - id;
        if (!rank_one_difference(d)) continue;
        HermVector dir;
        for (std::size_t j = 0; j < n && dir.empty(); ++j) {
            HermVector c = d.col(j);
            for (const auto& x : c)
                if (!x.is_zero()) {
                    dir = c;
                    break;
                }
        }
        const HermVector r = line_normal_form(dir);
        const HermVector gr = e.apply(r);
        std::optional<SixthRoot> rot;
        for (int k = 1; k < 6 && !rot; ++k) {
            const EisensteinInt u = SixthRoot(k).value();
            bool match = true;
            for (std::size_t t = 0; t < n && match; ++t) match = gr[t] == u * r[t];
            if (match) rot = SixthRoot(k);
        }
        if (!rot) throw std::logic_error("reflection without a root-of-unity eigenvalue");
        out.push_back({r, *rot, ip(*g.ambient_ptr(), r, r)});
    }
    return out;
}

std::vector<HermVector> mirror_roots(const std::vector<ReflectionInfo>& refl) {
    std::vector<HermVector> roots;
    for (const auto& r : refl) {
        bool seen = false;
        for (const auto& x : roots)
            if (x == r.root) {
                seen = true;
                break;
            }
        if (!seen) roots.push_back(r.root);
    }
    return roots;
}

bool free_action_check(const FiniteGroup& g) {
    const HermGram& amb = *g.ambient_ptr();
    const Inertia sig = signature(amb);
    if (sig.radical != 0 || sig.negative != 0)
        throw std::invalid_argument("free action check needs a positive-definite lattice");
    const std::size_t n = g.dim();
    // Pairing vectors h_r = G conj(r), so <f, r> = f . h_r.
    std::vector<std::vector<QOmega>> pairings;
    for (const auto& r : mirror_roots(reflections_in(g))) {
        std::vector<QOmega> h(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h[i] += QOmega(amb(i, j) * r[j].conj());
        pairings.push_back(std::move(h));
    }
    const auto id = Matrix<QOmega>::identity(n);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (is_identity_packed(g.raw(i), n)) continue;
        const auto fixed = nullspace(to_field(g.element(i).matrix()) - id);
        if (fixed.empty()) continue;
        bool inside = false;
        for (const auto& h : pairings) {
            bool orth = true;
            for (const auto& f : fixed) {
                QOmega s;
                for (std::size_t k = 0; k < n; ++k) s += f[k] * h[k];
                if (!s.is_zero()) {
                    orth = false;
                    break;
                }
            }
            if (orth) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

// Reduction modulo theta

Matrix<F3> f3_reduce(const Matrix<EisensteinInt>& m) {
    Matrix<F3> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = reduce_mod_theta(m(i, j));
    return r;
}

Matrix<F3> f3_reduce(const GroupElt& m) { return f3_reduce(m.matrix()); }

Matrix<F3> symplectic_gram(const HermGram& g) {
    if (!in_theta_dual(g)) throw std::invalid_argument("symplectic reduction needs all inner products in theta E");
    Matrix<F3> a(g.rank(), g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
        for (std::size_t j = 0; j < g.rank(); ++j)
            a(i, j) = reduce_mod_theta(exact_div(g(i, j), EisensteinInt::theta()));
    return a;
}

Matrix<F3> symplectic_transvection(const Matrix<F3>& a, const std::vector<F3>& v) {
    const std::size_t n = a.rows();
    // Column j is e_j + (e_j, v) v with (e_j, v) = sum_k a_jk v_k.
    Matrix<F3> t = Matrix<F3>::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        F3 c;
        for (std::size_t k = 0; k < n; ++k) c += a(j, k) * v[k];
        for (std::size_t i = 0; i < n; ++i) t(i, j) += c * v[i];
    }
    return t;
}

// Transvection words

HermGram signed_chain(const std::vector<int>& signs) {
    const std::size_t n = signs.size() + 1;
    Matrix<EisensteinInt> g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = 3;
        if (i + 1 < n) {
            const EisensteinInt t = EisensteinInt::theta() * EisensteinInt(signs[i]);
            g(i, i + 1) = t;
            g(i + 1, i) = t.conj();
        }
    }
    return HermGram(std::move(g));
}

HermVector a5_xi(std::size_t dim) {
    if (dim < 5) throw std::invalid_argument("A5 vector needs dimension >= 5");
    HermVector xi(dim);
    const EisensteinInt t = EisensteinInt::theta();
    xi[0] = 1;
    xi[1] = -t;
    xi[2] = -2;
    xi[3] = t;
    xi[4] = 1;
    return xi;
}

std::vector<A5Pattern> a5_sign_search() {
    std::vector<A5Pattern> out;
    for (int mask = 0; mask < 16; ++mask) {
        A5Pattern p;
        std::vector<int> signs;
        for (int i = 0; i < 4; ++i) {
            p.signs[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
            signs.push_back(p.signs[static_cast<std::size_t>(i)]);
        }
        signs.push_back(1);
        const Ambient g = make_ambient(signed_chain(signs));
        const HermVector xi = a5_xi(6);
        p.isotropic = ip(*g, xi, xi).is_zero();
        if (p.isotropic) {
            const GroupElt t = transvection(g, xi);
            auto gens = basis_triflections(g);
            gens.pop_back();
            const GroupElt fwd = word_eval(g, gens).pow(6);
            std::vector<GroupElt> rev(gens.rbegin(), gens.rend());
            const GroupElt bwd = word_eval(g, rev).pow(6);
            p.forward_matches = fwd == t;
            p.reversed_matches = bwd == t;
            p.nontrivial = !t.is_identity();
        }
        out.push_back(p);
    }
    return out;
}

HermGram d4_star() {
    Matrix<EisensteinInt> g(4, 4);
    for (std::size_t i = 0; i < 4; ++i) g(i, i) = 3;
    for (std::size_t i = 0; i < 3; ++i) {
        g(i, 3) = EisensteinInt::theta();
        g(3, i) = EisensteinInt::theta().conj();
    }
    return HermGram(std::move(g));
}

HermGram d4_extended() {
    Matrix<EisensteinInt> g = direct_sum(d4_star().matrix(), Matrix<EisensteinInt>(1, 1, EisensteinInt(3)));
    g(0, 4) = EisensteinInt::theta();
    g(4, 0) = EisensteinInt::theta().conj();
    return HermGram(std::move(g));
}

HermVector d4_xi(std::size_t dim) {
    if (dim < 4) throw std::invalid_argument("D4 vector needs dimension >= 4");
    HermVector xi(dim);
    xi[0] = xi[1] = xi[2] = 1;
    xi[3] = -EisensteinInt::theta();
    return xi;
}

GroupElt d4_word(const Ambient& g, bool reversed) {
    auto gens = basis_triflections(g);
    gens.erase(gens.begin() + 4, gens.end());
    if (reversed) std::reverse(gens.begin(), gens.end());
    return word_eval(g, gens).pow(3);
}

}  // namespace eislat
