#include "eislat/eisenstein.hpp"

#include <sstream>
#include <stdexcept>

namespace eislat {

std::ostream& operator<<(std::ostream& os, F3 x) { return os << x.value(); }

EisensteinInt& EisensteinInt::operator+=(const EisensteinInt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

EisensteinInt& EisensteinInt::operator-=(const EisensteinInt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

// (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, and w^2 = -1 - w.
EisensteinInt& EisensteinInt::operator*=(const EisensteinInt& o) {
    mpz_class bd = b_ * o.b_;
    mpz_class na = a_ * o.a_ - bd;
    mpz_class nb = a_ * o.b_ + b_ * o.a_ - bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

std::string EisensteinInt::to_string() const {
    if (b_ == 0) return a_.get_str();
    std::ostringstream os;
    if (a_ != 0) os << a_.get_str();
    if (b_ == 1) {
        os << (a_ != 0 ? "+" : "") << "w";
    } else if (b_ == -1) {
        os << "-w";
    } else {
        if (b_ > 0 && a_ != 0) os << "+";
        os << b_.get_str() << "w";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x) { return os << x.to_string(); }

namespace {

// Nearest integer to p/n for n > 0, ties rounded up.
mpz_class round_div(const mpz_class& p, const mpz_class& n) {
    mpz_class q;
    mpz_class num = 2 * p + n;
    mpz_class den = 2 * n;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& x, const EisensteinInt& y) {
    if (y.is_zero()) throw std::domain_error("Eisenstein division by zero");
    const mpz_class n = y.norm();
    const EisensteinInt p = x * y.conj();
    EisensteinInt q(round_div(p.a(), n), round_div(p.b(), n));
    EisensteinInt r = x - q * y;
    return {std::move(q), std::move(r)};
}

bool divides(const EisensteinInt& d, const EisensteinInt& x) {
    if (d.is_zero()) return x.is_zero();
    const mpz_class n = d.norm();
    const EisensteinInt p = x * d.conj();
    return mpz_divisible_p(p.a().get_mpz_t(), n.get_mpz_t()) &&
           mpz_divisible_p(p.b().get_mpz_t(), n.get_mpz_t());
}

EisensteinInt exact_div(const EisensteinInt& x, const EisensteinInt& d) {
    if (d.is_zero()) throw std::domain_error("Eisenstein division by zero");
    const mpz_class n = d.norm();
    const EisensteinInt p = x * d.conj();
    if (!mpz_divisible_p(p.a().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(p.b().get_mpz_t(), n.get_mpz_t())) {
        throw std::domain_error(x.to_string() + " is not divisible by " + d.to_string());
    }
    mpz_class qa, qb;
    mpz_divexact(qa.get_mpz_t(), p.a().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(qb.get_mpz_t(), p.b().get_mpz_t(), n.get_mpz_t());
    return {qa, qb};
}

EisensteinInt unit_to_canonical(const EisensteinInt& x) {
    if (x.is_zero()) throw std::invalid_argument("zero has no canonical associate");
    for (int k = 0; k < 6; ++k) {
        EisensteinInt u = SixthRoot(k).value();
        EisensteinInt y = u * x;
        if (y.a() > y.b() && y.b() >= 0) return u;
    }
    throw std::logic_error("no associate in the fundamental sextant");
}

EisensteinInt canonical_associate(const EisensteinInt& x) {
    if (x.is_zero()) return x;
    return unit_to_canonical(x) * x;
}

Bezout extended_gcd(const EisensteinInt& x, const EisensteinInt& y) {
    if (x.is_zero() && y.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    EisensteinInt r0 = x, r1 = y;
    EisensteinInt s0 = 1, s1 = 0;
    EisensteinInt t0 = 0, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        EisensteinInt s2 = s0 - q * s1;
        EisensteinInt t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const EisensteinInt u = unit_to_canonical(r0);
    return {u * r0, u * s0, u * t0};
}

EisensteinInt gcd(const EisensteinInt& x, const EisensteinInt& y) { return extended_gcd(x, y).g; }

F3 reduce_mod_theta(const EisensteinInt& x) {
    mpz_class s = x.a() + x.b();
    return F3(static_cast<int>(mpz_fdiv_ui(s.get_mpz_t(), 3)));
}

EisensteinInt lift(F3 x) { return EisensteinInt(static_cast<long>(x.balanced())); }

EisensteinInt SixthRoot::value() const {
    switch (k_) {
        case 0: return {1L, 0L};
        case 1: return {1L, 1L};    // -wbar
        case 2: return {0L, 1L};    // w
        case 3: return {-1L, 0L};
        case 4: return {-1L, -1L};  // wbar
        default: return {0L, -1L};  // -w
    }
}

SixthRoot SixthRoot::parse(const std::string& text) {
    if (text == "1") return SixthRoot(0);
    if (text == "-1") return SixthRoot(3);
    if (text == "w") return SixthRoot(2);
    if (text == "-w") return SixthRoot(5);
    if (text == "w2" || text == "wb") return SixthRoot(4);
    if (text == "-w2" || text == "-wb") return SixthRoot(1);
    throw std::invalid_argument("not a sixth root of unity: '" + text + "'");
}

SixthRoot SixthRoot::from_unit(const EisensteinInt& u) {
    for (int k = 0; k < 6; ++k)
        if (SixthRoot(k).value() == u) return SixthRoot(k);
    throw std::domain_error(u.to_string() + " is not a unit");
}

std::string SixthRoot::to_string() const {
    static const char* names[] = {"1", "-wb", "w", "-1", "wb", "-w"};
    return names[k_];
}

}  // namespace eislat

std::size_t std::hash<eislat::EisensteinInt>::operator()(const eislat::EisensteinInt& x) const noexcept {
    const std::size_t ha = mpz_get_ui(x.a().get_mpz_t()) ^ (mpz_sgn(x.a().get_mpz_t()) < 0 ? 0x9e37u : 0u);
    const std::size_t hb = mpz_get_ui(x.b().get_mpz_t()) ^ (mpz_sgn(x.b().get_mpz_t()) < 0 ? 0x7f4au : 0u);
    return ha * 1000003u ^ (hb + 0x9e3779b97f4a7c15ull + (ha << 6) + (ha >> 2));
}
