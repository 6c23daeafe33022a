#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eislat/hermitian.hpp"
#include "eislat/zlattice.hpp"

using namespace eislat;

namespace {

const EisensteinInt th = EisensteinInt::theta();
const EisensteinInt w = EisensteinInt::omega();

HermVector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

}  // namespace

TEST_CASE("Gram entries of Lambda") {
    const HermGram l = lambda();
    REQUIRE(l.rank() == 11);
    CHECK(ip(l, e(11, 0), e(11, 0)) == EisensteinInt(3));
    CHECK(ip(l, e(11, 1), e(11, 2)) == th);
    CHECK(ip(l, e(11, 2), e(11, 1)) == th.conj());
    CHECK(ip(l, e(11, 0), e(11, 1)) == EisensteinInt(0));
    CHECK(ip(l, e(11, 9), e(11, 9)) == EisensteinInt(0));
    CHECK(ip(l, e(11, 9), e(11, 10)) == th);
    // the two E8 blocks are orthogonal
    CHECK(ip(l, e(11, 4), e(11, 5)) == EisensteinInt(0));
}

TEST_CASE("inner product is linear then antilinear") {
    const HermGram g = chain(2);
    const HermVector x{1, 0}, y{0, 1};
    CHECK(ip(g, HermVector{w, 0}, y) == w * th);
    CHECK(ip(g, x, HermVector{0, w}) == w.conj() * th);
    CHECK_THROWS_AS(ip(g, HermVector{1}, y), std::invalid_argument);
}

TEST_CASE("chain(11) is degenerate of rank 10") {
    CHECK(chain(11).rank() == 11);
    CHECK(form_rank(chain(11)) == 10);
    CHECK(form_rank(chain(10)) == 10);
    CHECK(radical_basis(chain(11)).size() == 1);
    const HermVector r = radical_basis(chain(11)).front();
    for (std::size_t i = 0; i < 11; ++i) CHECK(ip(chain(11), r, e(11, i)).is_zero());
    CHECK_THROWS_AS(chain(0), std::invalid_argument);
}

TEST_CASE("(3)^Z is A2 and hyp^Z is II(2,2)") {
    const ZGram a = z_realization(diag({3}));
    CHECK(a(0, 0) == 2);
    CHECK(a(0, 1) == -1);
    CHECK(a(1, 1) == 2);
    const ZGram e8 = z_realization(e8e());
    CHECK(e8.rank() == 8);
    CHECK(is_even(e8));
    CHECK(determinant(e8) == 1);
    CHECK(inertia(e8) == Inertia{8, 0, 0});
    const ZGram u = z_realization(hyp());
    CHECK(is_even(u));
    CHECK(determinant(u) == 1);
    CHECK(inertia(u) == Inertia{2, 0, 2});
    CHECK_THROWS_AS(z_realization(diag({1})), std::invalid_argument);
}

TEST_CASE("invariants of Lambda and Lambda10") {
    CHECK(signature(lambda()) == Inertia{10, 0, 1});
    CHECK(signature(lambda10()) == Inertia{9, 0, 1});
    CHECK(det_e(lambda()) == EisensteinInt(-729));
    CHECK(det_e(lambda10()) == EisensteinInt(-243));
    const ZGram z = z_realization(lambda());
    CHECK(z.rank() == 22);
    CHECK(determinant(z) == 3);
    CHECK(inertia(z) == Inertia{20, 0, 2});
    CHECK(theta_self_dual(lambda10()));
    CHECK(!theta_self_dual(lambda()));
    CHECK(in_theta_dual(lambda()));
    CHECK(signature(chain(11)) == Inertia{9, 1, 1});
}

TEST_CASE("root types") {
    HermVector s(11);
    s[0] = 1;
    CHECK(root_classify(lambda(), s) == RootType::Chordal);
    HermVector r(11);
    r[9] = 1;
    r[10] = w;
    CHECK(ip(lambda(), r, r) == EisensteinInt(3));
    CHECK(root_classify(lambda(), r) == RootType::Nodal);
    CHECK(root_classify(lambda(), e(11, 1)) == RootType::Nodal);
    CHECK_THROWS_AS(root_classify(lambda(), e(11, 9)), std::invalid_argument);
    CHECK(to_string(RootType::Chordal) == "chordal");
}

TEST_CASE("isometries") {
    const HermGram n = named_lattice("diag:3+e8e+e8e+diag:-3,3");
    REQUIRE(n.rank() == 11);
    Matrix<EisensteinInt> swap = Matrix<EisensteinInt>::identity(11);
    swap(0, 0) = swap(10, 10) = 0;
    swap(0, 10) = swap(10, 0) = 1;
    CHECK(is_isometry(n, swap));
    Matrix<EisensteinInt> bad = Matrix<EisensteinInt>::identity(11);
    bad(0, 0) = bad(9, 9) = 0;
    bad(0, 9) = bad(9, 0) = 1;
    CHECK(!is_isometry(n, bad));
    Matrix<EisensteinInt> scalar = Matrix<EisensteinInt>::identity(11);
    for (std::size_t i = 0; i < 11; ++i) scalar(i, i) = w;
    CHECK(is_isometry(n, scalar));
}

TEST_CASE("named lattices") {
    CHECK(named_lattice("lambda") == lambda());
    CHECK(named_lattice("lambda10") == lambda10());
    CHECK(named_lattice("diag:3+e8e+e8e+hyp") == lambda());
    CHECK(named_lattice("e8e+e8e+hyp") == lambda10());
    CHECK(named_lattice("chain:4") == e8e());
    CHECK(named_lattice("diag:3,-3").rank() == 2);
    CHECK_THROWS_AS(named_lattice("leech"), std::invalid_argument);
    CHECK_THROWS_AS(named_lattice("chain:x"), std::invalid_argument);
    CHECK_THROWS_AS(named_lattice(""), std::invalid_argument);
}

TEST_CASE("HermGram rejects asymmetric input and names the entry") {
    Matrix<EisensteinInt> m(2, 2);
    m(0, 0) = 3;
    m(1, 1) = 3;
    m(0, 1) = th;
    m(1, 0) = th;
    try {
        HermGram g(m);
        FAIL("accepted an asymmetric Gram");
    } catch (const std::invalid_argument& ex) {
        CHECK(std::string(ex.what()).find("(0,1)") != std::string::npos);
    }
    Matrix<EisensteinInt> d(1, 1);
    d(0, 0) = w;
    CHECK_THROWS_AS(HermGram{d}, std::invalid_argument);
}

TEST_CASE("content and primitive") {
    const HermVector v{th * EisensteinInt(2), th * w};
    CHECK(canonical_associate(content(v)) == canonical_associate(th));
    const HermVector p = primitive(v);
    CHECK(content(p).is_unit());
    CHECK(content(HermVector{0, 0}).is_zero());
}
