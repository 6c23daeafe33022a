#pragma once

// Exact arithmetic in the Eisenstein integers Z[w], w^2 + w + 1 = 0.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

namespace eislat {

/// Element of F_3, stored as 0, 1 or 2.
class F3 {
public:
    constexpr F3() = default;
    constexpr F3(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

    constexpr int value() const { return v_; }
    /// Representative in {-1, 0, 1}.
    constexpr int balanced() const { return v_ == 2 ? -1 : v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr F3 operator+(F3 x, F3 y) { return F3(x.v_ + y.v_); }
    friend constexpr F3 operator-(F3 x, F3 y) { return F3(x.v_ + 3 - y.v_); }
    friend constexpr F3 operator*(F3 x, F3 y) { return F3(x.v_ * y.v_); }
    constexpr F3 operator-() const { return F3(3 - v_); }
    constexpr F3& operator+=(F3 o) { return *this = *this + o; }
    constexpr F3& operator-=(F3 o) { return *this = *this - o; }
    constexpr F3& operator*=(F3 o) { return *this = *this * o; }
    /// Multiplicative inverse; x must be nonzero (1 and 2 are self-inverse).
    constexpr F3 inverse() const { return *this; }
    friend constexpr bool operator==(F3, F3) = default;

private:
    std::uint8_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, F3 x);

/// a + b*w with arbitrary-precision a, b.
class EisensteinInt {
public:
    EisensteinInt() = default;
    EisensteinInt(long a) : a_(a) {}
    EisensteinInt(mpz_class a, mpz_class b = 0) : a_(std::move(a)), b_(std::move(b)) {}
    EisensteinInt(long a, long b) : a_(a), b_(b) {}

    static EisensteinInt omega() { return {0L, 1L}; }
    static EisensteinInt omega_bar() { return {-1L, -1L}; }
    /// theta = w - wbar = 1 + 2w = sqrt(-3).
    static EisensteinInt theta() { return {1L, 2L}; }

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_unit() const { return norm() == 1; }

    /// a^2 - ab + b^2.
    mpz_class norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
    /// a + bw -> (a - b) - bw.
    EisensteinInt conj() const { return {a_ - b_, -b_}; }
    /// Twice the real part: 2a - b.
    mpz_class twice_real() const { return 2 * a_ - b_; }

    EisensteinInt operator-() const { return {-a_, -b_}; }
    EisensteinInt& operator+=(const EisensteinInt& o);
    EisensteinInt& operator-=(const EisensteinInt& o);
    EisensteinInt& operator*=(const EisensteinInt& o);
    friend EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y) { return x += y; }
    friend EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y) { return x -= y; }
    friend EisensteinInt operator*(EisensteinInt x, const EisensteinInt& y) { return x *= y; }

    friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// Human-readable form using 'w' for omega, e.g. "2+w", "-1-w", "3".
    std::string to_string() const;

private:
    mpz_class a_ = 0;
    mpz_class b_ = 0;
};

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x);

/// Quotient and remainder with norm(r) < norm(y); q is x/y rounded coordinatewise.
std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& x, const EisensteinInt& y);

bool divides(const EisensteinInt& d, const EisensteinInt& x);

/// x / d, throwing std::domain_error unless d divides x.
EisensteinInt exact_div(const EisensteinInt& x, const EisensteinInt& d);

/// The associate of x with argument in [0, pi/3), i.e. a > b >= 0. Zero maps to zero.
EisensteinInt canonical_associate(const EisensteinInt& x);

/// Unit u with u * x == canonical_associate(x); x nonzero.
EisensteinInt unit_to_canonical(const EisensteinInt& x);

/// Generator of the ideal (x, y) in canonical form. Throws std::invalid_argument on (0, 0).
EisensteinInt gcd(const EisensteinInt& x, const EisensteinInt& y);

struct Bezout {
    EisensteinInt g;  // canonical gcd
    EisensteinInt s;
    EisensteinInt t;  // s*x + t*y == g
};
Bezout extended_gcd(const EisensteinInt& x, const EisensteinInt& y);

/// The ring map E -> E/theta E = F_3, a + bw -> a + b mod 3.
F3 reduce_mod_theta(const EisensteinInt& x);

/// Representative in {-1, 0, 1} of an F_3 residue.
EisensteinInt lift(F3 x);

/// Sixth root of unity eps^k with eps = exp(i pi/3) = -wbar = 1 + w.
/// k = 0..5 gives 1, -wbar, w, -1, wbar, -w.
class SixthRoot {
public:
    constexpr SixthRoot() = default;
    constexpr explicit SixthRoot(int k) : k_(((k % 6) + 6) % 6) {}

    static constexpr SixthRoot one() { return SixthRoot(0); }
    static constexpr SixthRoot omega() { return SixthRoot(2); }
    static constexpr SixthRoot omega_bar() { return SixthRoot(4); }
    static constexpr SixthRoot minus_one() { return SixthRoot(3); }

    constexpr int exponent() const { return k_; }
    constexpr SixthRoot inverse() const { return SixthRoot(-k_); }
    constexpr SixthRoot conj() const { return inverse(); }
    /// Multiplicative order: 1, 2, 3 or 6.
    constexpr int order() const { return k_ == 0 ? 1 : k_ == 3 ? 2 : (k_ % 2 == 0 ? 3 : 6); }
    friend constexpr SixthRoot operator*(SixthRoot x, SixthRoot y) { return SixthRoot(x.k_ + y.k_); }
    friend constexpr bool operator==(SixthRoot, SixthRoot) = default;

    EisensteinInt value() const;
    /// Parses "1", "-1", "w", "-w", "w2", "-w2", "wb", "-wb" (w2 == wb == wbar).
    static SixthRoot parse(const std::string& text);
    /// Inverse of value(); throws std::domain_error unless u is a unit.
    static SixthRoot from_unit(const EisensteinInt& u);
    std::string to_string() const;

private:
    int k_ = 0;
};

}  // namespace eislat

namespace std {
template <>
struct hash<eislat::EisensteinInt> {
    std::size_t operator()(const eislat::EisensteinInt& x) const noexcept;
};
}  // namespace std
