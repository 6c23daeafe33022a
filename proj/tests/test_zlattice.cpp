#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eislat/hermitian.hpp"
#include "eislat/zlattice.hpp"

using namespace eislat;

namespace {

ZGram zgram(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<mpz_class>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return ZGram(Matrix<mpz_class>::from_rows(r));
}

}  // namespace

TEST_CASE("determinants of small forms") {
    CHECK(determinant(zgram({{2, -1}, {-1, 2}})) == 3);
    CHECK(determinant(zgram({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(e8_gram()) == 1);
    CHECK(determinant(an_root_gram(4)) == 5);
    CHECK(determinant(zgram({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}})) == 1);
}

TEST_CASE("inertia") {
    CHECK(inertia(zgram({{1, 0}, {0, -1}})) == Inertia{1, 0, 1});
    CHECK(inertia(zgram({{0, 1}, {1, 0}})) == Inertia{1, 0, 1});
    CHECK(inertia(zgram({{1, 1}, {1, 1}})) == Inertia{1, 1, 0});
    CHECK(inertia(zgram({{0, 0}, {0, 0}})) == Inertia{0, 2, 0});
    CHECK(inertia(e8_gram()) == Inertia{8, 0, 0});
    // hyperbolic pair hidden behind a zero diagonal
    CHECK(inertia(zgram({{0, 2, 1}, {2, 0, 0}, {1, 0, 0}})) == Inertia{1, 1, 1});
}

TEST_CASE("parity") {
    CHECK(is_even(e8_gram()));
    CHECK(!is_even(zgram({{1}})));
    CHECK(is_even(an_root_gram(5)));
}

TEST_CASE("E8 Gram has the E8 Dynkin shape") {
    const ZGram e = e8_gram();
    int edges = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(e(i, i) == 2);
        for (std::size_t j = i + 1; j < 8; ++j) {
            if (e(i, j) != 0) {
                CHECK(e(i, j) == -1);
                ++edges;
            }
        }
    }
    CHECK(edges == 7);
}

TEST_CASE("vanishing lattices: radical 2 exactly for n = 5 and 11") {
    for (int n = 1; n <= 11; ++n) {
        CAPTURE(n);
        const Inertia in = inertia(an_vanishing_gram(n));
        CHECK(in.positive + in.radical + in.negative == static_cast<std::size_t>(2 * n));
        CHECK(in.radical == ((n == 5 || n == 11) ? 2u : 0u));
    }
    CHECK(inertia(an_vanishing_gram(12)).negative >= 4);
    CHECK_THROWS_AS(an_vanishing_gram(0), std::invalid_argument);
}

TEST_CASE("vanishing lattice entries") {
    const ZGram g = an_vanishing_gram(3);
    // a1..a3, b1..b3
    CHECK(g(0, 1) == -1);
    CHECK(g(3, 4) == -1);
    CHECK(g(0, 3) == -1);
    CHECK(g(1, 3) == 1);
    CHECK(g(0, 4) == 0);
}

TEST_CASE("tensor products multiply determinants") {
    const ZGram a2 = an_root_gram(2);
    const ZGram t = tensor_gram(a2, a2);
    CHECK(t.rank() == 4);
    CHECK(determinant(t) == 81);  // det(A (x) B) = det(A)^2 det(B)^2 for 2x2
}

TEST_CASE("A2 with an order-3 rotation is the E-lattice (3)") {
    Matrix<mpz_class> rot(2, 2);
    rot(0, 1) = -1;
    rot(1, 0) = 1;
    rot(1, 1) = -1;
    const HermGram h = hermitian_from_z(an_root_gram(2), rot);
    REQUIRE(h.rank() == 1);
    CHECK(h(0, 0) == EisensteinInt(3));
}

TEST_CASE("hermitian_from_z rejects bad rotations") {
    const Matrix<mpz_class> id = Matrix<mpz_class>::identity(2);
    CHECK_THROWS_AS(hermitian_from_z(an_root_gram(2), id), std::invalid_argument);
}

TEST_CASE("II(2,2) with the omega action is hyperbolic") {
    const ZGram z = z_realization(hyp());
    CHECK(determinant(z) == 1);
    CHECK(inertia(z) == Inertia{2, 0, 2});
    const HermGram h = hermitian_from_z(z, omega_matrix(2));
    CHECK(det_e(h) == EisensteinInt(-3));
    CHECK(signature(h) == Inertia{1, 0, 1});
}

TEST_CASE("Z-realization and back") {
    for (const HermGram& g : {diag({3}), e8e(), hyp(), lambda(), lambda10(), chain(1), chain(2), chain(3), chain(5),
                              chain(6), chain(7), chain(8), chain(9), chain(10), chain(11)}) {
        CAPTURE(g.rank());
        CHECK(hermitian_from_z(z_realization(g), omega_matrix(g.rank())) == g);
    }
}
