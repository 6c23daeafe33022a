#pragma once

// Univariate integer polynomials, exact resultants and discriminants, and
// coefficient extraction for the discriminant of
//   s^12 + u2 s^10 + u3 s^9 + ... + u12.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace eislat {

/// Dense integer polynomial, coefficient i multiplying s^i; trailing zeros trimmed.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& leading() const { return c_.back(); }
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

    IntPoly derivative() const;
    mpz_class eval(const mpz_class& x) const;

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    std::string to_string() const;

private:
    std::vector<mpz_class> c_;
};

/// Resultant via the Sylvester matrix and a fraction-free determinant.
/// Throws std::invalid_argument if either polynomial is zero.
mpz_class resultant(const IntPoly& f, const IntPoly& g);

/// (-1)^(m(m-1)/2) Res(f, f') / lc(f), m = deg f. Throws for deg f < 2.
mpz_class discriminant(const IntPoly& f);

/// Degree of gcd(f, g) over Q (-1 if both are zero).
long gcd_degree(const IntPoly& f, const IntPoly& g);

/// Exponents of u2..u12 (index 0 is u2).
struct WeightedMonomial {
    std::array<unsigned, 11> exps{};

    unsigned long weight() const;
    std::string to_string() const;
    friend bool operator==(const WeightedMonomial&, const WeightedMonomial&) = default;

    /// "u12^9 u11^2 u2"; throws std::invalid_argument.
    static WeightedMonomial parse(const std::string& text);
};

/// The family s^12 + u2 s^10 + ... + u12 at u (index 0 is u2).
IntPoly a11_family(const std::array<mpz_class, 11>& u);

/// delta(u2, ..., u12).
mpz_class a11_discriminant(const std::array<mpz_class, 11>& u);

/// Exact coefficient of m in delta; 0 unless weight(m) = 132. The variables
/// outside the support of m are set to zero and the remaining weight-132
/// monomials are interpolated from exact evaluations.
mpz_class a11_coeff(const WeightedMonomial& m);

/// u12^11 and u12^(11-i) u11^i ui for i = 11, ..., 2.
std::vector<WeightedMonomial> rigidity_monomials();

/// delta(l^2 u2, ..., l^12 u12) = l^132 delta(u) on random samples with
/// entries in [-bound, bound] and l != 0.
bool quasihomogeneity_check(std::size_t samples, long bound, std::uint64_t seed = 1);

}  // namespace eislat
