#include "eislat/discriminant.hpp"

#include "eislat/linalg.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace eislat {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (std::size_t i = c_.size(); i > 0; --i) r = r * x + c_[i - 1];
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i > 0; --i) {
        const mpz_class& c = c_[i - 1];
        if (c == 0) continue;
        const std::size_t e = i - 1;
        mpz_class mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (mag != 1 || e == 0) os << mag;
        if (e >= 1) os << "s";
        if (e >= 2) os << "^" << e;
        first = false;
    }
    return os.str();
}

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant with the zero polynomial");
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const std::size_t n = static_cast<std::size_t>(g.degree());
    if (m + n == 0) return 1;
    Matrix<mpz_class> s(m + n, m + n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = f.coeff(m - k);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = g.coeff(n - k);
    return determinant(std::move(s));
}

mpz_class discriminant(const IntPoly& f) {
    if (f.degree() < 2) throw std::invalid_argument("discriminant needs degree >= 2");
    const long m = f.degree();
    mpz_class r = resultant(f, f.derivative());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    if ((m * (m - 1) / 2) % 2 != 0) q = -q;
    return q;
}

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_rem(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const mpq_class c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

}  // namespace

long gcd_degree(const IntPoly& f, const IntPoly& g) {
    QPoly a(f.coeffs().begin(), f.coeffs().end());
    QPoly b(g.coeffs().begin(), g.coeffs().end());
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return static_cast<long>(a.size()) - 1;
}

unsigned long WeightedMonomial::weight() const {
    unsigned long w = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) w += (i + 2) * exps[i];
    return w;
}

std::string WeightedMonomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = exps.size(); i > 0; --i) {
        const unsigned e = exps[i - 1];
        if (e == 0) continue;
        if (!first) os << " ";
        os << "u" << (i + 1);
        if (e > 1) os << "^" << e;
        first = false;
    }
    return first ? "1" : os.str();
}

WeightedMonomial WeightedMonomial::parse(const std::string& text) {
    WeightedMonomial m;
    std::istringstream in(text);
    std::string tok;
    bool any = false;
    while (in >> tok) {
        any = true;
        if (tok.size() < 2 || tok[0] != 'u') throw std::invalid_argument("bad monomial factor '" + tok + "'");
        const auto caret = tok.find('^');
        const std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        unsigned long i = 0, e = 1;
        try {
            std::size_t used = 0;
            i = std::stoul(idx, &used);
            if (used != idx.size()) throw std::invalid_argument(idx);
            if (caret != std::string::npos) {
                const std::string ex = tok.substr(caret + 1);
                e = std::stoul(ex, &used);
                if (used != ex.size()) throw std::invalid_argument(ex);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad monomial factor '" + tok + "'");
        }
        if (i < 2 || i > 12) throw std::invalid_argument("variable index out of range in '" + tok + "'");
        m.exps[i - 2] += static_cast<unsigned>(e);
    }
    if (!any) throw std::invalid_argument("empty monomial");
    return m;
}

IntPoly a11_family(const std::array<mpz_class, 11>& u) {
    std::vector<mpz_class> c(13);
    c[12] = 1;
    for (std::size_t i = 0; i < 11; ++i) c[10 - i] = u[i];  // u_{i+2} multiplies s^(10-i)
    return IntPoly(std::move(c));
}

mpz_class a11_discriminant(const std::array<mpz_class, 11>& u) { return discriminant(a11_family(u)); }

namespace {

void enumerate_weighted(const std::vector<std::size_t>& vars, std::size_t pos, unsigned long remaining,
                        WeightedMonomial& cur, std::vector<WeightedMonomial>& out) {
    if (pos == vars.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    const unsigned long w = vars[pos] + 2;
    for (unsigned long e = 0; e * w <= remaining; ++e) {
        cur.exps[vars[pos]] = static_cast<unsigned>(e);
        enumerate_weighted(vars, pos + 1, remaining - e * w, cur, out);
    }
    cur.exps[vars[pos]] = 0;
}

mpz_class monomial_value(const WeightedMonomial& m, const std::array<mpz_class, 11>& u) {
    mpz_class v = 1;
    for (std::size_t i = 0; i < 11; ++i)
        if (m.exps[i] > 0) {
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), u[i].get_mpz_t(), m.exps[i]);
            v *= p;
        }
    return v;
}

}  // namespace

mpz_class a11_coeff(const WeightedMonomial& m) {
    if (m.weight() != 132) return 0;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < 11; ++i)
        if (m.exps[i] > 0) vars.push_back(i);
    std::vector<WeightedMonomial> monos;
    WeightedMonomial cur;
    enumerate_weighted(vars, 0, 132, cur, monos);
    std::size_t target = monos.size();
    for (std::size_t i = 0; i < monos.size(); ++i)
        if (monos[i] == m) target = i;
    if (target == monos.size()) throw std::logic_error("monomial missing from its own weight class");

    std::mt19937_64 rng(0x5eed + vars.size());
    std::uniform_int_distribution<long> pick(-6, 6);
    std::vector<std::vector<mpq_class>> rows;
    std::vector<mpq_class> rhs;
    auto add_point = [&] {
        std::array<mpz_class, 11> u{};
        for (const auto i : vars) {
            long v = 0;
            while (v == 0) v = pick(rng);
            u[i] = v;
        }
        std::vector<mpq_class> row;
        for (const auto& mono : monos) row.emplace_back(monomial_value(mono, u));
        rows.push_back(std::move(row));
        rhs.emplace_back(a11_discriminant(u));
    };
    const std::size_t k = monos.size();
    while (rows.size() < k) add_point();
    for (;;) {
        const Matrix<mpq_class> a = Matrix<mpq_class>::from_rows(rows);
        if (rank(a) == k) {
            const auto x = solve(a, rhs);
            if (!x) throw std::logic_error("inconsistent interpolation system for the discriminant");
            const mpq_class& c = (*x)[target];
            if (c.get_den() != 1) throw std::logic_error("non-integral discriminant coefficient");
            return c.get_num();
        }
        for (int extra = 0; extra < 4; ++extra) add_point();
    }
}

std::vector<WeightedMonomial> rigidity_monomials() {
    std::vector<WeightedMonomial> out;
    WeightedMonomial top;
    top.exps[10] = 11;
    out.push_back(top);
    for (unsigned i = 11; i >= 2; --i) {
        WeightedMonomial m;
        m.exps[10] = 11 - i;
        m.exps[9] += i;
        m.exps[i - 2] += 1;
        out.push_back(m);
    }
    return out;
}

bool quasihomogeneity_check(std::size_t samples, long bound, std::uint64_t seed) {
    if (bound < 1) throw std::invalid_argument("sample bound must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(-bound, bound);
    for (std::size_t s = 0; s < samples; ++s) {
        std::array<mpz_class, 11> u{}, scaled{};
        long l = 0;
        while (l == 0) l = pick(rng);
        const mpz_class lam = l;
        for (std::size_t i = 0; i < 11; ++i) {
            u[i] = pick(rng);
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), lam.get_mpz_t(), i + 2);
            scaled[i] = p * u[i];
        }
        mpz_class l132;
        mpz_pow_ui(l132.get_mpz_t(), lam.get_mpz_t(), 132);
        if (a11_discriminant(scaled) != l132 * a11_discriminant(u)) return false;
    }
    return true;
}

}  // namespace eislat
