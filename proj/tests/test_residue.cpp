#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eislat/residue.hpp"

using namespace eislat;

namespace {

const SixthRoot one = SixthRoot::one();
const SixthRoot w = SixthRoot::omega();
const SixthRoot wb = SixthRoot::omega_bar();

WeightedHypersurface fermat(std::vector<SixthRoot> chi = {}) {
    WeightedHypersurface h;
    h.weights = {1, 1, 1, 1, 1, 1};
    h.degree = 3;
    h.exponents = {3, 3, 3, 3, 3, 3};
    h.character = std::move(chi);
    return h;
}

std::vector<long> totals(const WeightedHypersurface& h) {
    std::vector<long> out;
    for (const auto& r : full_report(h)) out.push_back(r.total);
    return out;
}

std::vector<long> at(const WeightedHypersurface& h, SixthRoot l) {
    std::vector<long> out;
    for (const auto& r : full_report(h)) out.push_back(r.by_eigenvalue[static_cast<std::size_t>(l.exponent())]);
    return out;
}

}  // namespace

TEST_CASE("cubic fourfold Hodge numbers") {
    // cubics in 6 variables modulo the 6 partials x_i^2: C(8,3) - 6*6 = 20
    CHECK(jacobian_dim(fermat(), 3) == 20);
    CHECK(jacobian_dim(fermat(), 0) == 1);
    CHECK(jacobian_dim(fermat(), 6) == 1);
    CHECK(jacobian_dim(fermat(), 7) == 0);
    CHECK(hodge_piece_dim(fermat(), 1) == 1);
    CHECK(totals(fermat()) == std::vector<long>{0, 1, 20, 1, 0});
}

TEST_CASE("generic and monomial modes agree on Fermat cases") {
    WeightedHypersurface g = fermat({one, one, one, one, one, w});
    WeightedHypersurface m = g;
    g.mode = WeightedHypersurface::Mode::GenericCI;
    for (long grade = 0; grade <= 7; ++grade) CHECK(jacobian_characters(g, grade) == jacobian_characters(m, grade));
    WeightedHypersurface c;
    c.weights = {3, 3, 3, 2, 1};
    c.degree = 6;
    c.exponents = {2, 2, 2, 3, 6};
    WeightedHypersurface cg = c;
    cg.mode = WeightedHypersurface::Mode::GenericCI;
    for (long grade = 0; grade <= 12; ++grade) CHECK(jacobian_dim(c, grade) == jacobian_dim(cg, grade));
}

TEST_CASE("Gorenstein symmetry about the socle degree") {
    WeightedHypersurface h;
    h.weights = {1, 1, 6, 6, 6, 4};
    h.degree = 12;
    h.mode = WeightedHypersurface::Mode::GenericCI;
    long socle = 0;
    for (long wt : h.weights) socle += h.degree - 2 * wt;
    for (long t = 0; t <= socle; ++t) CHECK(jacobian_dim(h, t) == jacobian_dim(h, socle - t));
    CHECK(jacobian_dim(h, socle + 1) == 0);
}

TEST_CASE("w-eigenspaces of the cubic fourfold") {
    const auto h = fermat({one, one, one, one, one, w});
    CHECK(eigen_hodge_dim(h, 1, w) == 1);
    CHECK(eigen_hodge_dim(h, 2, w) == 10);
    CHECK(eigen_hodge_dim(h, 2, wb) == 10);
    // complex conjugation swaps (q, l) and (dim - q, conj l)
    CHECK(eigen_hodge_dim(h, 1, w) == eigen_hodge_dim(h, 3, wb));
    CHECK(eigen_hodge_dim(h, 3, w) == 0);
    // Omega(1) is the residue of 1 * Omega / F and has eigenvalue prod chi_i = w
    CHECK(eigen_hodge_dims(h, 1)[2] == 1);
}

TEST_CASE("chordal E1 fiber") {
    WeightedHypersurface h;
    h.weights = {3, 3, 3, 2, 1};
    h.degree = 6;
    h.exponents = {2, 2, 2, 3, 6};
    CHECK(totals(h) == std::vector<long>{0, 1, 1, 0});
    CHECK(hodge_piece_dim(h, 1) == 1);
    CHECK(hodge_piece_dim(h, 2) == 1);
}

TEST_CASE("nodal E1 fiber") {
    WeightedHypersurface h;
    h.weights = {3, 3, 3, 3, 2, 1};
    h.degree = 6;
    h.exponents = {2, 2, 2, 2, 3, 6};
    h.character = {one, one, one, one, w, one};
    CHECK(residue_grade(h, 2) == 3);
    const auto basis = monomial_basis(h, 3);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == std::vector<long>{0, 0, 0, 0, 0, 3});  // s^3
    CHECK(basis[1] == std::vector<long>{0, 0, 0, 0, 1, 1});  // zs
    const EigenCounts e = eigen_hodge_dims(h, 2);
    CHECK(e[static_cast<std::size_t>(w.exponent())] == 1);   // s^3
    CHECK(e[static_cast<std::size_t>(wb.exponent())] == 1);  // zs: w * w
}

TEST_CASE("curve C: f(x,y) + z^6 in P(1,1,2)") {
    WeightedHypersurface h;
    h.weights = {1, 1, 2};
    h.degree = 12;
    h.mode = WeightedHypersurface::Mode::GenericCI;
    h.character = {one, one, SixthRoot(5)};
    // genus of a degree-12 curve in P(1,1,2): sum of h^{1,0} over eigenvalues
    long g = 0;
    for (long x : eigen_hodge_dims(h, 0)) g += x;
    CHECK(g == 25);
    CHECK(at(h, SixthRoot(1)) == std::vector<long>{1, 9});
    CHECK(at(h, SixthRoot(5)) == std::vector<long>{9, 1});
}

TEST_CASE("threefold Z") {
    WeightedHypersurface h;
    h.weights = {1, 1, 6, 6, 6, 4};
    h.degree = 12;
    h.mode = WeightedHypersurface::Mode::GenericCI;
    h.character = {one, one, one, one, one, w};
    CHECK(at(h, w) == std::vector<long>{0, 1, 9, 0, 0});
    CHECK(at(h, wb) == std::vector<long>{0, 0, 9, 1, 0});
}

TEST_CASE("validation") {
    WeightedHypersurface h = fermat();
    h.exponents[0] = 2;
    CHECK_THROWS_AS(h.validate(), std::invalid_argument);
    WeightedHypersurface c = fermat({one, one, one, one, one, SixthRoot(1)});
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);  // -wbar does not preserve x^3
    WeightedHypersurface g;
    g.weights = {5, 1};
    g.degree = 12;
    g.mode = WeightedHypersurface::Mode::GenericCI;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
    CHECK_THROWS_AS(hodge_piece_dim(fermat(), -1), std::invalid_argument);
    CHECK_THROWS_AS(monomial_basis(g, 0), std::invalid_argument);
}
