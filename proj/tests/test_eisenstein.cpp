#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eislat/eisenstein.hpp"
#include "eislat/qomega.hpp"

#include <random>

using namespace eislat;

TEST_CASE("omega satisfies w^2 + w + 1 = 0") {
    const EisensteinInt w = EisensteinInt::omega();
    CHECK(w * w + w + EisensteinInt(1) == EisensteinInt(0));
    CHECK(w * w == EisensteinInt::omega_bar());
    CHECK(w * w * w == EisensteinInt(1));
}

TEST_CASE("theta squared is -3 and theta has norm 3") {
    const EisensteinInt t = EisensteinInt::theta();
    CHECK(t * t == EisensteinInt(-3));
    CHECK(t.norm() == 3);
    CHECK(t * t.conj() == EisensteinInt(3));
    CHECK(t.conj() == -t);
}

TEST_CASE("norm is multiplicative and conj is an involution") {
    const EisensteinInt x(3, -7), y(-2, 5);
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK(x.conj().conj() == x);
    CHECK((x * x.conj()).is_rational());
    CHECK(EisensteinInt(2, 1).norm() == 3);  // 4 - 2 + 1
}

TEST_CASE("Euclidean division leaves a smaller remainder") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int i = 0; i < 500; ++i) {
        const EisensteinInt x(d(rng), d(rng));
        EisensteinInt y(d(rng), d(rng));
        if (y.is_zero()) y = 1;
        const auto [q, r] = divmod(x, y);
        CHECK(q * y + r == x);
        CHECK(r.norm() < y.norm());
    }
}

TEST_CASE("gcd and Bezout") {
    const EisensteinInt a = EisensteinInt(3, 1) * EisensteinInt(2, 5);
    const EisensteinInt b = EisensteinInt(3, 1) * EisensteinInt(-4, 1);
    const EisensteinInt g = gcd(a, b);
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    CHECK(divides(EisensteinInt(3, 1), g));
    const Bezout bz = extended_gcd(a, b);
    CHECK(bz.s * a + bz.t * b == bz.g);
    CHECK(bz.g == g);
    CHECK_THROWS_AS(gcd(EisensteinInt(0), EisensteinInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(exact_div(EisensteinInt(1), EisensteinInt::theta()), std::domain_error);
}

TEST_CASE("canonical associates lie in the sector a > b >= 0") {
    const EisensteinInt x(-5, 3);
    const EisensteinInt c = canonical_associate(x);
    CHECK(c.a() > c.b());
    CHECK(c.b() >= 0);
    CHECK(unit_to_canonical(x) * x == c);
    for (int k = 0; k < 6; ++k) CHECK(canonical_associate(SixthRoot(k).value() * x) == c);
    CHECK(canonical_associate(EisensteinInt(0)).is_zero());
}

TEST_CASE("reduction mod theta") {
    CHECK(reduce_mod_theta(EisensteinInt::omega()) == F3(1));
    CHECK(reduce_mod_theta(EisensteinInt::theta()) == F3(0));
    CHECK(reduce_mod_theta(EisensteinInt(3)) == F3(0));
    CHECK(reduce_mod_theta(EisensteinInt(2, 1)) == F3(0));
    CHECK(reduce_mod_theta(EisensteinInt(-1)) == F3(2));
    const EisensteinInt x(4, -7), y(-3, 11);
    CHECK(reduce_mod_theta(x * y) == reduce_mod_theta(x) * reduce_mod_theta(y));
    CHECK(reduce_mod_theta(x + y) == reduce_mod_theta(x) + reduce_mod_theta(y));
    CHECK(lift(F3(2)) == EisensteinInt(-1));
}

TEST_CASE("sixth roots of unity") {
    const EisensteinInt eps(1, 1);
    CHECK(SixthRoot(1).value() == eps);
    CHECK(SixthRoot(2).value() == EisensteinInt::omega());
    CHECK(SixthRoot(4).value() == EisensteinInt::omega_bar());
    CHECK(SixthRoot(3).value() == EisensteinInt(-1));
    CHECK(SixthRoot(5).value() == -EisensteinInt::omega());
    CHECK(SixthRoot(1).value() == -EisensteinInt::omega_bar());
    CHECK(SixthRoot(1).to_string() == "-wb");
    CHECK(SixthRoot(4).to_string() == "wb");
    CHECK(SixthRoot(5).to_string() == "-w");
    for (int k = 0; k < 6; ++k) {
        CHECK(SixthRoot::parse(SixthRoot(k).to_string()) == SixthRoot(k));
        CHECK(SixthRoot::from_unit(SixthRoot(k).value()) == SixthRoot(k));
    }
    CHECK(SixthRoot::parse("w2") == SixthRoot::omega_bar());
    CHECK(SixthRoot(1).order() == 6);
    CHECK(SixthRoot(2).order() == 3);
    CHECK(SixthRoot(3).order() == 2);
    CHECK_THROWS(SixthRoot::parse("i"));
    CHECK_THROWS_AS(SixthRoot::from_unit(EisensteinInt(2)), std::domain_error);
}

TEST_CASE("to_string") {
    CHECK(EisensteinInt(2, 1).to_string() == "2+w");
    CHECK(EisensteinInt(-1, -1).to_string() == "-1-w");
    CHECK(EisensteinInt(3).to_string() == "3");
    CHECK(EisensteinInt(0, 1).to_string() == "w");
}

TEST_CASE("QOmega field arithmetic") {
    const QOmega x(EisensteinInt(2, 5));
    CHECK(x * x.inverse() == QOmega(1));
    const QOmega half(mpq_class(1, 2));
    CHECK(!half.is_integral());
    CHECK((half + half).is_integral());
    CHECK((QOmega(EisensteinInt::theta()) / QOmega(EisensteinInt::theta())).to_eisenstein() == EisensteinInt(1));
}
