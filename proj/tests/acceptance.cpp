// Acceptance runner: one PASS/FAIL line per criterion, each with its time budget.

#include "eislat/discriminant.hpp"
#include "eislat/f3.hpp"
#include "eislat/linalg.hpp"
#include "eislat/monodromy.hpp"
#include "eislat/residue.hpp"
#include "eislat/word.hpp"
#include "eislat/zlattice.hpp"
#include "properties.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace eislat;

namespace {

struct Part {
    std::string what;
    bool ok;
};

class Criterion {
public:
    void expect(const std::string& what, bool ok) { parts_.push_back({what, ok}); }
    template <class T, class U>
    void equal(const std::string& what, const T& got, const U& want) {
        std::ostringstream os;
        os << what << " = " << got;
        if (!(got == want)) os << " (want " << want << ")";
        parts_.push_back({os.str(), got == want});
    }
    const std::vector<Part>& parts() const { return parts_; }

private:
    std::vector<Part> parts_;
};

int failures = 0;

void run(int id, const std::string& title, double budget_s, const std::function<void(Criterion&)>& body) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(std::string("exception: ") + e.what(), false);
    }
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = t < budget_s;
    for (const auto& p : c.parts()) ok = ok && p.ok;
    failures += !ok;
    std::cout << "criterion " << std::setw(2) << id << ": " << (ok ? "PASS" : "FAIL") << "  " << title << "  ["
              << std::fixed << std::setprecision(2) << t << "s / " << budget_s << "s]\n";
    for (const auto& p : c.parts()) std::cout << "    " << (p.ok ? "ok   " : "FAIL ") << p.what << "\n";
}

std::string str(const Inertia& i) {
    std::ostringstream os;
    os << i;
    return os.str();
}

HermVector nodal_root() {
    HermVector r(11);
    r[9] = 1;
    r[10] = EisensteinInt::omega();
    return r;
}

}  // namespace

int main() {
    run(1, "Lambda invariants", 1.0, [](Criterion& c) {
        const HermGram l = lambda();
        c.equal("signature", str(signature(l)), "(10,0,1)");
        const EisensteinInt d = det_e(l);
        c.expect("|det_e| = 3^6 (det_e = " + d.to_string() + ")", d.is_rational() && abs(d.a()) == 729);
        const ZGram z = z_realization(l);
        c.equal("|det Z|", mpz_class(abs(determinant(z))), 3);
        c.equal("Z inertia", str(inertia(z)), "(20,0,2)");
    });

    run(2, "Z-realizations", 1.0, [](Criterion& c) {
        const ZGram a = z_realization(diag({3}));
        c.expect("(3)^Z = ((2,-1),(-1,2))", a(0, 0) == 2 && a(0, 1) == -1 && a(1, 0) == -1 && a(1, 1) == 2);
        const ZGram e = z_realization(e8e());
        c.expect("(E8^E)^Z even unimodular positive-definite rank 8",
                 e.rank() == 8 && is_even(e) && determinant(e) == 1 && inertia(e) == Inertia{8, 0, 0});
        const ZGram u = z_realization(hyp());
        c.expect("hyp^Z even unimodular of inertia (2,0,2)",
                 is_even(u) && abs(determinant(u)) == 1 && inertia(u) == Inertia{2, 0, 2});
    });

    run(3, "Hermitian-form roundtrip", 1.0, [](Criterion& c) {
        std::vector<std::pair<std::string, HermGram>> ls{{"(3)", diag({3})}, {"E8^E", e8e()}, {"hyp", hyp()},
                                                         {"Lambda", lambda()}, {"Lambda10", lambda10()}};
        for (int n = 1; n <= 11; ++n) ls.emplace_back("chain(" + std::to_string(n) + ")", chain(n));
        bool all = true;
        std::string bad;
        for (const auto& [name, g] : ls)
            if (!(hermitian_from_z(z_realization(g), omega_matrix(g.rank())) == g)) {
                all = false;
                bad += " " + name;
            }
        c.expect("hermitian_from_z(z_realization(L)) = L for 16 lattices" + (bad.empty() ? "" : ", failed:" + bad), all);
    });

    run(4, "vanishing lattices", 1.0, [](Criterion& c) {
        std::ostringstream os;
        bool ok = true;
        for (int n = 1; n <= 11; ++n) {
            const std::size_t r = inertia(an_vanishing_gram(n)).radical;
            os << r << (n < 11 ? "," : "");
            ok = ok && r == ((n == 5 || n == 11) ? 2u : 0u);
        }
        c.expect("radical dims n=1..11: " + os.str(), ok);
        c.expect("n=12 negative count " + std::to_string(inertia(an_vanishing_gram(12)).negative) + " >= 4",
                 inertia(an_vanishing_gram(12)).negative >= 4);
    });

    run(5, "monodromy words", 1.0, [](Criterion& c) {
        const auto g = make_ambient(chain(11));
        const GroupElt w = eval_word(g, parse_word("a1..a10 a11^2 a10..a1"));
        c.equal("projective order of w on chain(11) mod radical", projective_order(w, true).to_string(), "6");
        const auto l = make_ambient(lambda());
        c.equal("hexaflection projective order",
                projective_order(reflection(l, unit_vector(11, 0), SixthRoot(1)), false).to_string(), "6");
        const auto h = make_ambient(named_lattice("chain:11+diag:3"));
        std::cout << "    info  w on chain(11)+(3) mod radical has projective order "
                  << projective_order(eval_word(h, parse_word("a1..a10 a11^2 a10..a1")), true).to_string() << "\n";
    });

    run(6, "A5 and D4 transvections", 1.0, [](Criterion& c) {
        bool found = false;
        for (const auto& p : a5_sign_search())
            if (p.isotropic && p.forward_matches && p.nontrivial) {
                found = true;
                const auto g5 = make_ambient(signed_chain(std::vector<int>(p.signs.begin(), p.signs.end())));
                c.expect("A5 xi isotropic and nonzero", ip(*g5, a5_xi(5), a5_xi(5)).is_zero() && !a5_xi(5)[0].is_zero());
                c.expect("(a1...a5)^6 = transvection(xi) on chain(5)",
                         eval_word(g5, parse_word("(a1..a5)^6")) == transvection(g5, a5_xi(5)));
                std::vector<int> ext(p.signs.begin(), p.signs.end());
                ext.push_back(1);
                const auto g6 = make_ambient(signed_chain(ext));
                c.expect("(a1...a5)^6 = transvection(xi) != 1 on the rank-6 chain",
                         eval_word(g6, parse_word("(a1..a5)^6")) == transvection(g6, a5_xi(6)) &&
                             !transvection(g6, a5_xi(6)).is_identity());
                break;
            }
        c.expect("a sign pattern was found", found);
        const auto star = make_ambient(d4_star());
        c.expect("D4 xi isotropic and nonzero", ip(*star, d4_xi(4), d4_xi(4)).is_zero() && !d4_xi(4)[0].is_zero());
        c.expect("(a1 a2 a3 b)^3 = transvection(r1+r2+r3-theta r') on the star",
                 d4_word(star, false) == transvection(star, d4_xi(4)));
        const auto ext = make_ambient(d4_extended());
        c.expect("same on the extended star, where it is nontrivial",
                 d4_word(ext, false) == transvection(ext, d4_xi(5)) && !transvection(ext, d4_xi(5)).is_identity());
    });

    run(7, "central words", 1.0, [](Criterion& c) {
        std::string orders;
        for (int n = 1; n <= 4; ++n) orders += (n > 1 ? "," : "") + order(central_word(n)).to_string();
        c.equal("orders n=1..4", orders, "3,2,3,6");
        c.equal("central_word_scalar(7)", central_word_scalar(7).to_string(), "wb");
        c.equal("central_word_scalar(4)", central_word_scalar(4).to_string(), "wb");
    });

    run(8, "finite reflection groups", 300.0, [](Criterion& c) {
        const std::size_t want[] = {3, 24, 648, 155520};
        for (int n = 1; n <= 4; ++n) {
            const FiniteGroup g = group_closure(basis_triflections(make_ambient(chain(n))));
            c.equal("|R" + std::to_string(n) + "|", g.size(), want[n - 1]);
            const auto refl = reflections_in(g);
            bool tri = true;
            for (const auto& r : refl)
                tri = tri && r.root_norm == EisensteinInt(3) &&
                      (r.rotation == SixthRoot::omega() || r.rotation == SixthRoot::omega_bar());
            c.expect("R" + std::to_string(n) + ": " + std::to_string(refl.size()) +
                         " reflections, all +-triflections in norm-3 roots",
                     tri && !refl.empty());
            c.expect("R" + std::to_string(n) + " free_action_check", free_action_check(g));
        }
    });

    run(9, "A11 discriminant", 120.0, [](Criterion& c) {
        std::size_t nonzero = 0;
        for (const auto& m : rigidity_monomials()) nonzero += a11_coeff(m) != 0;
        c.equal("nonzero hypothesis coefficients", nonzero, 11u);
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), 12, 12);
        c.equal("coeff(u12^11)", a11_coeff(WeightedMonomial::parse("u12^11")), t);
        c.expect("quasihomogeneity on 100 samples", quasihomogeneity_check(100, 3));
    });

    run(10, "F3 machinery", 30.0, [](Criterion& c) {
        c.equal("rank symplectic_gram(Lambda10)", rank(symplectic_gram(lambda10())), 10u);
        c.equal("radical of symplectic_gram(Lambda)", 11 - rank(symplectic_gram(lambda())), 1u);
        const HermGram n = named_lattice("diag:3+e8e+e8e+diag:-3,3");
        const F3QuadSpace s = disc_group(n);
        bool diag_ok = s.k == 3;
        for (std::size_t i = 0; diag_ok && i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) diag_ok = diag_ok && s.q(i, j).balanced() == (i != j ? 0 : i == 1 ? -1 : 1);
        c.expect("disc_group = diag(1,-1,1)", diag_ok);
        c.equal("norm-1 vectors", enumerate_norm(s, F3(1)).size(), 12u);
        const auto lines = isotropic_lines(s, std::nullopt, F3Vector{0, 0, 1});
        c.equal("isotropic lines not orthogonal to r", lines.size(), 2u);
        for (const auto& line : lines) {
            const SubLattice l = glue(n, line);
            c.expect("glued lattice has det_e -3^6, signature (10,0,1), inside its theta-dual",
                     det_e(l.gram) == EisensteinInt(-729) && signature(l.gram) == Inertia{10, 0, 1} && in_theta_dual(l.gram));
        }
        F3Vector start(10);
        start[0] = 1;
        const OrbitSearch o = grow_hyperplane_orbit(lambda10(), start, 29524);
        c.equal("hyperplane orbit (" + std::to_string(o.generators) + " roots)", o.orbit, 29524u);
    });

    run(11, "residue Hodge numbers", 1.0, [](Criterion& c) {
        const SixthRoot one = SixthRoot::one(), w = SixthRoot::omega();
        WeightedHypersurface f;
        f.weights = {1, 1, 1, 1, 1, 1};
        f.degree = 3;
        f.exponents = {3, 3, 3, 3, 3, 3};
        f.character = {one, one, one, one, one, w};
        std::string tot;
        for (const auto& r : full_report(f)) tot += (r.q ? "," : "") + std::to_string(r.total);
        c.equal("Fermat fourfold", tot, "0,1,20,1,0");
        c.expect("Fermat w-eigenspace (1,10)", eigen_hodge_dim(f, 1, w) == 1 && eigen_hodge_dim(f, 2, w) == 10);

        WeightedHypersurface cc;
        cc.weights = {1, 1, 2};
        cc.degree = 12;
        cc.mode = WeightedHypersurface::Mode::GenericCI;
        cc.character = {one, one, SixthRoot(5)};
        c.expect("curve C at -wbar: (1,9)",
                 eigen_hodge_dim(cc, 0, SixthRoot(1)) == 1 && eigen_hodge_dim(cc, 1, SixthRoot(1)) == 9);

        WeightedHypersurface ch;
        ch.weights = {3, 3, 3, 2, 1};
        ch.degree = 6;
        ch.exponents = {2, 2, 2, 3, 6};
        long mid = 0;
        for (const auto& r : full_report(ch)) mid += r.total;
        c.equal("chordal E1 middle cohomology", mid, 2);

        WeightedHypersurface nd;
        nd.weights = {3, 3, 3, 3, 2, 1};
        nd.degree = 6;
        nd.exponents = {2, 2, 2, 2, 3, 6};
        nd.character = {one, one, one, one, w, one};
        const auto basis = monomial_basis(nd, residue_grade(nd, 2));
        const bool shape = basis.size() == 2 && basis[0] == std::vector<long>{0, 0, 0, 0, 0, 3} &&
                           basis[1] == std::vector<long>{0, 0, 0, 0, 1, 1};
        const EigenCounts e = eigen_hodge_dims(nd, 2);
        c.expect("nodal E1 basis {s^3, zs} with eigenvalues {w, w^2}", shape && e[2] == 1 && e[4] == 1);

        WeightedHypersurface z;
        z.weights = {1, 1, 6, 6, 6, 4};
        z.degree = 12;
        z.mode = WeightedHypersurface::Mode::GenericCI;
        z.character = {one, one, one, one, one, w};
        std::string zr;
        for (const auto& r : full_report(z)) zr += (r.q ? "," : "") + std::to_string(r.by_eigenvalue[2]);
        c.equal("Z w-part", zr, "0,1,9,0,0");
    });

    run(12, "root taxonomy", 1.0, [](Criterion& c) {
        HermVector s(11);
        s[0] = 1;
        c.equal("root_classify (1,0,...,0)", to_string(root_classify(lambda(), s)), "chordal");
        c.equal("root_classify (0,...,0,1,w)", to_string(root_classify(lambda(), nodal_root())), "nodal");
        const HermGram l = lambda10();
        // A chordal root r has <r, L> = 3E, so r/theta lies in theta L* and has norm 1.
        c.expect("Lambda10 norms lie in 3Z (all inner products in theta E)", in_theta_dual(l));
        c.equal("pairing on Lambda10 / theta Lambda10 has rank", rank(symplectic_gram(l)), 10u);
        c.expect("theta Lambda10* = Lambda10, so r/theta would be a norm-1 vector of Lambda10", theta_self_dual(l));
        c.expect("no chordal roots in Lambda10: 1 is not in 3Z", 1 % 3 != 0);
    });

    run(13, "property suites", 60.0, [](Criterion& c) {
        for (const auto& [name, r] : {std::pair{"Hermitian axioms", props::hermitian_axioms(1000)},
                                      std::pair{"isometry preservation", props::isometry_preservation(1000)},
                                      std::pair{"f3_reduce homomorphism", props::f3_homomorphism(1000)},
                                      std::pair{"discriminant-gcd equivalence", props::discriminant_gcd(1000)}})
            c.expect(std::string(name) + ": " + std::to_string(r.cases) + " cases" +
                         (r.ok() ? "" : ", first failure " + r.first_failure),
                     r.ok() && r.cases == 1000);
    });

    std::cout << (13 - failures) << " of 13 criteria pass\n";
    return failures == 0 ? 0 : 1;
}
