#include "eislat/verify.hpp"

#include "eislat/discriminant.hpp"
#include "eislat/f3.hpp"
#include "eislat/json_io.hpp"
#include "eislat/linalg.hpp"
#include "eislat/monodromy.hpp"
#include "eislat/residue.hpp"
#include "eislat/word.hpp"
#include "eislat/zlattice.hpp"

#include <map>
#include <memory>
#include <sstream>

namespace eislat {

namespace {

std::string b(bool x) { return x ? "true" : "false"; }

template <class T>
std::string s(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string counts(const std::vector<long>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string f3_row(const F3Vector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].balanced();
    os << ')';
    return os.str();
}

HermGram glue_ambient() { return named_lattice("diag:3+e8e+e8e+diag:-3,3"); }

HermVector nodal_root_of_lambda() {
    HermVector r(11);
    r[9] = 1;
    r[10] = EisensteinInt::omega();
    return r;
}

const FiniteGroup& reflection_group(int n) {
    static std::map<int, std::unique_ptr<FiniteGroup>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<FiniteGroup>(group_closure(basis_triflections(make_ambient(chain(n)))));
    return *slot;
}

WeightedHypersurface fermat_fourfold(bool with_character) {
    WeightedHypersurface h;
    h.weights = {1, 1, 1, 1, 1, 1};
    h.degree = 3;
    h.exponents = {3, 3, 3, 3, 3, 3};
    if (with_character) h.character = {SixthRoot::one(), SixthRoot::one(), SixthRoot::one(), SixthRoot::one(),
                                       SixthRoot::one(), SixthRoot::omega()};
    return h;
}

WeightedHypersurface chordal_fiber() {
    WeightedHypersurface h;
    h.weights = {3, 3, 3, 2, 1};
    h.degree = 6;
    h.exponents = {2, 2, 2, 3, 6};
    return h;
}

// y1 y2 + y3 y4 is a sum of squares after a linear change of coordinates.
WeightedHypersurface nodal_fiber(bool with_character) {
    WeightedHypersurface h;
    h.weights = {3, 3, 3, 3, 2, 1};
    h.degree = 6;
    h.exponents = {2, 2, 2, 2, 3, 6};
    if (with_character) h.character = {SixthRoot::one(), SixthRoot::one(), SixthRoot::one(), SixthRoot::one(),
                                       SixthRoot::omega(), SixthRoot::one()};
    return h;
}

// f(x, y) + z^6 in P(1,1,2) with z -> -w z.
WeightedHypersurface curve_c() {
    WeightedHypersurface h;
    h.weights = {1, 1, 2};
    h.degree = 12;
    h.mode = WeightedHypersurface::Mode::GenericCI;
    h.character = {SixthRoot::one(), SixthRoot::one(), SixthRoot(5)};
    return h;
}

// f(x, y) + u^2 + v^2 + w^2 + z^3 in P(1,1,6,6,6,4) with z -> w z.
WeightedHypersurface threefold_z() {
    WeightedHypersurface h;
    h.weights = {1, 1, 6, 6, 6, 4};
    h.degree = 12;
    h.mode = WeightedHypersurface::Mode::GenericCI;
    h.character = {SixthRoot::one(), SixthRoot::one(), SixthRoot::one(), SixthRoot::one(), SixthRoot::one(),
                   SixthRoot::omega()};
    return h;
}

std::string monomial_name(const std::vector<long>& e, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        out += vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::vector<long> eigen_row(const WeightedHypersurface& h, SixthRoot lambda) {
    std::vector<long> out;
    for (const auto& r : full_report(h)) out.push_back(r.by_eigenvalue[static_cast<std::size_t>(lambda.exponent())]);
    return out;
}

std::vector<long> total_row(const WeightedHypersurface& h) {
    std::vector<long> out;
    for (const auto& r : full_report(h)) out.push_back(r.total);
    return out;
}

std::vector<CheckSpec> build_registry() {
    std::vector<CheckSpec> c;
    auto add = [&](std::string name, std::string anchor, std::string expected, std::function<std::string()> f) {
        c.push_back({std::move(name), std::move(anchor), std::move(expected), std::move(f)});
    };

    // Z-lattices
    add("zlattice.vanishing.n12.negative_at_least_4", "the n = 12 vanishing lattice has a negative-definite subspace of dimension at least 4",
        "true", [] { return b(inertia(an_vanishing_gram(12)).negative >= 4); });
    add("zlattice.determinant.e8", "E8 is even unimodular", "1", [] { return determinant(e8_gram()).get_str(); });
    add("zlattice.determinant.ii22", "II(2,2) is even unimodular", "1", [] {
        Matrix<mpz_class> m(4, 4);
        m(0, 1) = m(1, 0) = m(2, 3) = m(3, 2) = 1;
        return determinant(ZGram(m)).get_str();
    });
    add("zlattice.is_even.e8", "E8 is even", "true", [] { return b(is_even(e8_gram())); });
    add("zlattice.vanishing.n5.radical", "the vanishing lattice is degenerate for n = 5 with 2-dimensional radical", "2",
        [] { return std::to_string(inertia(an_vanishing_gram(5)).radical); });
    add("zlattice.vanishing.n11.radical", "the vanishing lattice is degenerate for n = 11 with 2-dimensional radical", "2",
        [] { return std::to_string(inertia(an_vanishing_gram(11)).radical); });
    add("zlattice.vanishing.other.radical", "the vanishing lattice is nondegenerate for n <= 10 other than 5",
        "(0,0,0,0,0,0,0,0,0)", [] {
            std::vector<long> r;
            for (int n : {1, 2, 3, 4, 6, 7, 8, 9, 10}) r.push_back(static_cast<long>(inertia(an_vanishing_gram(n)).radical));
            return counts(r);
        });
    add("zlattice.hermitian_from_z.a2", "A2 roots of norm 2 become Eisenstein roots of norm 3", "[[3]]", [] {
        Matrix<mpz_class> rot(2, 2);
        rot(0, 1) = -1;
        rot(1, 0) = 1;
        rot(1, 1) = -1;
        const HermGram h = hermitian_from_z(an_root_gram(2), rot);
        return "[[" + h(0, 0).to_string() + "]]";
    });
    add("zlattice.hermitian_from_z.ii22", "II(2,2) with an order-3 isometry is the hyperbolic E-lattice",
        "det_e -3, signature (1,0,1)", [] {
            const HermGram h = hermitian_from_z(z_realization(hyp()), omega_matrix(2));
            return "det_e " + det_e(h).to_string() + ", signature " + s(signature(h));
        });

    // Hermitian lattices
    add("hermitian.ip.lambda.e1e1", "first diagonal entry of the Lambda Gram matrix", "3",
        [] { return ip(lambda(), unit_vector(11, 0), unit_vector(11, 0)).to_string(); });
    add("hermitian.ip.lambda.e2e3", "E8 block entries above the diagonal are theta", EisensteinInt::theta().to_string(),
        [] { return ip(lambda(), unit_vector(11, 1), unit_vector(11, 2)).to_string(); });
    add("hermitian.rank.lambda", "Lambda is free of rank 11", "11", [] { return std::to_string(lambda().rank()); });
    add("hermitian.form_rank.chain11", "the chain of 11 roots has Gram rank 10", "10",
        [] { return std::to_string(form_rank(chain(11))); });
    add("hermitian.z_realization.diag3", "(3)^Z is the A2 Gram", "[[2,-1],[-1,2]]",
        [] { return to_json(z_realization(diag({3})))["g"].dump(); });
    add("hermitian.z_realization.e8e", "(E8^E)^Z is E8", "even true, det 1, inertia (8,0,0)", [] {
        const ZGram z = z_realization(e8e());
        return "even " + b(is_even(z)) + ", det " + determinant(z).get_str() + ", inertia " + s(inertia(z));
    });
    add("hermitian.z_realization.hyp", "hyp^Z is II(2,2)", "even true, det 1, inertia (2,0,2)", [] {
        const ZGram z = z_realization(hyp());
        return "even " + b(is_even(z)) + ", det " + determinant(z).get_str() + ", inertia " + s(inertia(z));
    });
    add("hermitian.signature.lambda", "Lambda has signature (10,1)", "(10,0,1)", [] { return s(signature(lambda())); });
    add("hermitian.signature.lambda10", "Lambda10 has signature (9,1)", "(9,0,1)", [] { return s(signature(lambda10())); });
    add("hermitian.det_e.lambda", "Lambda has determinant of absolute value 3^6", "-729", [] { return det_e(lambda()).to_string(); });
    add("hermitian.det_e.lambda10", "Lambda10 has determinant of absolute value 3^5", "-243",
        [] { return det_e(lambda10()).to_string(); });
    add("hermitian.z_realization_det.lambda", "the 22-dimensional Z-lattice of Lambda has determinant 3", "3",
        [] { return mpz_class(abs(determinant(z_realization(lambda())))).get_str(); });
    add("hermitian.z_inertia.lambda", "the Z-lattice of Lambda has signature (20,2)", "(20,0,2)",
        [] { return s(inertia(z_realization(lambda()))); });
    add("hermitian.theta_self_dual.lambda10", "theta Lambda10* = Lambda10", "true", [] { return b(theta_self_dual(lambda10())); });
    add("hermitian.root_classify.chordal", "(1,0,...,0) is a chordal root of Lambda", "chordal",
        [] { return to_string(root_classify(lambda(), unit_vector(11, 0))); });
    add("hermitian.root_classify.nodal", "(0,...,0,1,w) is a nodal root of Lambda", "nodal",
        [] { return to_string(root_classify(lambda(), nodal_root_of_lambda())); });
    add("hermitian.is_isometry.swap", "(3)+E8+E8+(-3)+(3) has an isometry exchanging its two (3) summands", "true", [] {
        const HermGram g = glue_ambient();
        Matrix<EisensteinInt> m = Matrix<EisensteinInt>::identity(g.rank());
        const std::size_t last = g.rank() - 1;
        m(0, 0) = m(last, last) = 0;
        m(0, last) = m(last, 0) = 1;
        return b(is_isometry(g, m));
    });
    add("hermitian.is_isometry.nodal_triflection", "the w-reflection in a norm-3 vector preserves Lambda", "true",
        [] { return b(is_isometry(lambda(), reflection(make_ambient(lambda()), nodal_root_of_lambda(), SixthRoot::omega()).matrix())); });
    add("hermitian.no_chordal_roots.lambda10",
        "Lambda10 has no chordal roots: norms lie in 3Z and the form mod theta is nondegenerate",
        "norms in 3Z true, pairing rank 10, 9 does not divide 3", [] {
            const HermGram g = lambda10();
            const bool norms = in_theta_dual(g);
            const std::size_t r = rank(symplectic_gram(g));
            // A chordal root would lie in the kernel of the pairing, hence in
            // theta Lambda10, and have norm divisible by 9.
            return "norms in 3Z " + b(norms) + ", pairing rank " + std::to_string(r) + ", 9 does not divide " +
                   ip(g, unit_vector(10, 0), unit_vector(10, 0)).to_string();
        });

    // Reflections and monodromy
    add("monodromy.reflection.lambda.nodal_order", "the w-reflection in a nodal root of Lambda has order 3", "3", [] {
        const auto g = make_ambient(lambda());
        return order(reflection(g, nodal_root_of_lambda(), SixthRoot::omega())).to_string();
    });
    add("monodromy.transvection.a5", "xi = r1 - theta r2 - 2 r3 + theta r4 + r5 is nonzero isotropic and its transvection is a nontrivial unipotent isometry",
        "isotropic true, identity false, order infinite", [] {
            const auto g = make_ambient(signed_chain({1, 1, 1, 1, 1}));
            const HermVector xi = a5_xi(6);
            const GroupElt t = transvection(g, xi);
            return "isotropic " + b(ip(*g, xi, xi).is_zero()) + ", identity " + b(t.is_identity()) + ", order " +
                   order(t).to_string();
        });
    add("monodromy.word_eval.a5", "(a1...a5)^6 acts as the unitary transvection in xi", "chain5 true, rank6 true", [] {
        for (const auto& p : a5_sign_search())
            if (p.isotropic && p.forward_matches && p.nontrivial) {
                const std::vector<int> signs(p.signs.begin(), p.signs.end());
                const auto g5 = make_ambient(signed_chain(signs));
                const bool on5 = eval_word(g5, parse_word("(a1..a5)^6")) == transvection(g5, a5_xi(5));
                std::vector<int> ext = signs;
                ext.push_back(1);
                const auto g6 = make_ambient(signed_chain(ext));
                const bool on6 = eval_word(g6, parse_word("(a1..a5)^6")) == transvection(g6, a5_xi(6));
                return "chain5 " + b(on5) + ", rank6 " + b(on6);
            }
        return std::string("no sign pattern");
    });
    add("monodromy.word_eval.d4", "(a1 a2 a3 b)^3 acts as the unitary transvection in r1 + r2 + r3 - theta r'", "true", [] {
        const auto g = make_ambient(d4_extended());
        const GroupElt t = transvection(g, d4_xi(5));
        return b(!t.is_identity() && d4_word(g, false) == t);
    });
    add("monodromy.order.central.n2", "(a1 a2)^3 has order 2", "2", [] { return order(central_word(2)).to_string(); });
    add("monodromy.order.central.n4", "(a1...a4)^5 has order 6", "6", [] { return order(central_word(4)).to_string(); });
    add("monodromy.projective_order.hexaflection", "the hexaflection in a chordal root has order 6", "6", [] {
        const auto g = make_ambient(lambda());
        return projective_order(reflection(g, unit_vector(11, 0), SixthRoot(1)), false).to_string();
    });
    add("monodromy.projective_order.w.chain11", "w = a1...a10 a11^2 a10...a1 acts on CH(V) with order 6", "6", [] {
        const auto g = make_ambient(chain(11));
        return projective_order(eval_word(g, parse_word("a1..a10 a11^2 a10..a1")), true).to_string();
    });
    add("monodromy.central_word_scalar.n7", "(a1...a7)^8 acts as the scalar wbar", "wb",
        [] { return central_word_scalar(7).to_string(); });
    add("monodromy.central_word_scalar.n4", "(a1...a4)^5 acts as the scalar wbar", "wb",
        [] { return central_word_scalar(4).to_string(); });
    add("monodromy.braid_check.adjacent", "triflections in roots with inner product theta braid", "braid", [] {
        const auto g = make_ambient(chain(2));
        const auto a = basis_triflections(g);
        return to_string(braid_check(a[0], a[1]));
    });
    add("monodromy.reflections_in.r2", "every reflection of R2 is a triflection or its inverse in a norm-3 root",
        "reflections 8, all triflections true, all norm 3 true", [] {
            const auto refl = reflections_in(reflection_group(2));
            bool tri = true, norm3 = true;
            for (const auto& r : refl) {
                tri = tri && (r.rotation == SixthRoot::omega() || r.rotation == SixthRoot::omega_bar());
                norm3 = norm3 && r.root_norm == EisensteinInt(3);
            }
            return "reflections " + std::to_string(refl.size()) + ", all triflections " + b(tri) + ", all norm 3 " + b(norm3);
        });
    add("monodromy.free_action.r2", "R2 acts freely off its mirrors", "true", [] { return b(free_action_check(reflection_group(2))); });
    add("monodromy.free_action.r4", "R4 acts freely off its mirrors", "true", [] { return b(free_action_check(reflection_group(4))); });
    add("monodromy.group_order.r1_r4", "R1..R4 are finite", "(3,24,648,155520)", [] {
        std::vector<long> o;
        for (int n = 1; n <= 4; ++n) o.push_back(static_cast<long>(reflection_group(n).size()));
        return counts(o);
    });
    add("monodromy.symplectic_gram.lambda10", "the pairing on Lambda10 / theta Lambda10 is nondegenerate", "10",
        [] { return std::to_string(rank(symplectic_gram(lambda10()))); });
    add("monodromy.symplectic_gram.lambda", "the pairing on Lambda / theta Lambda has 1-dimensional kernel", "1",
        [] { return std::to_string(11 - rank(symplectic_gram(lambda()))); });
    add("monodromy.f3_reduce.triflection", "triflections act mod theta as symplectic transvections", "true", [] {
        const auto g = make_ambient(lambda10());
        const auto a = symplectic_gram(*g);
        bool ok = true;
        for (std::size_t i = 0; i < 8; ++i) {  // the E8 blocks; e9, e10 are isotropic
            std::vector<F3> v(10);
            v[i] = 1;
            ok = ok && f3_reduce(reflection(g, unit_vector(10, i), SixthRoot::omega())) == symplectic_transvection(a, v);
        }
        return b(ok);
    });

    // F_3 machinery
    add("f3.disc_group.glue_ambient", "the norms of a, b, r in the discriminant group are 1, -1, 1",
        "k 3, form [[1,0,0],[0,-1,0],[0,0,1]]", [] {
            const F3QuadSpace sp = disc_group(glue_ambient());
            std::string form = "[";
            for (std::size_t i = 0; i < sp.k; ++i) {
                form += i ? ",[" : "[";
                for (std::size_t j = 0; j < sp.k; ++j) form += (j ? "," : "") + std::to_string(sp.q(i, j).balanced());
                form += "]";
            }
            return "k " + std::to_string(sp.k) + ", form " + form + "]";
        });
    add("f3.enumerate_norm.norm1", "the norm-1 vectors are +-a, +-r, +-a+-b+-r", "12",
        [] { return std::to_string(enumerate_norm(diagonal_space({1, -1, 1}), F3(1)).size()); });
    add("f3.isotropic_lines.not_orth_r", "exactly two isotropic lines are not orthogonal to r: r - b and r + b",
        "(0,1,-1) (0,1,1)", [] {
            std::string out;
            for (const auto& l : isotropic_lines(diagonal_space({1, -1, 1}), std::nullopt, F3Vector{0, 0, 1}))
                out += (out.empty() ? "" : " ") + f3_row(l);
            return out;
        });
    add("f3.isotropic_lines.orth_a", "when s = a the span of b + r is admissible", "true", [] {
        for (const auto& l : isotropic_lines(diagonal_space({1, -1, 1}), F3Vector{1, 0, 0}, std::nullopt))
            if (l == normalize_line({0, 1, 1})) return std::string("true");
        return std::string("false");
    });
    auto glue_check = [](F3Vector line) {
        return [line] {
            const HermGram n = glue_ambient();
            const SubLattice l = glue(n, line);
            // the ideal <L, r> for r the last basis vector of the ambient
            EisensteinInt g = 0;
            for (const auto& v : l.basis) {
                QOmega x = 0;
                for (std::size_t i = 0; i < n.rank(); ++i) x += v[i] * QOmega(n(i, n.rank() - 1));
                const EisensteinInt e = x.to_eisenstein();
                g = (g.is_zero() && e.is_zero()) ? g : gcd(g, e);
            }
            return "det_e " + det_e(l.gram).to_string() + ", signature " + s(signature(l.gram)) + ", in_theta_dual " +
                   b(in_theta_dual(l.gram)) + ", <L,r> = " + g.to_string() + "E";
        };
    };
    const std::string glued = "det_e -729, signature (10,0,1), in_theta_dual true, <L,r> = " +
                              canonical_associate(EisensteinInt::theta()).to_string() + "E";
    add("f3.glue.r_minus_b", "gluing along r - b gives Lambda", glued, glue_check({0, 1, -1}));
    add("f3.glue.r_plus_b", "gluing along r + b gives a lattice with the same invariants", glued, glue_check({0, 1, 1}));
    add("f3.hyperplane_orbit.lambda10", "the hyperplanes of Lambda10 / theta Lambda10 form one orbit of size (3^10-1)/2",
        "29524", [] {
            F3Vector start(10);
            start[0] = 1;
            return std::to_string(grow_hyperplane_orbit(lambda10(), start, 29524).orbit);
        });

    // Discriminant
    add("disc.a11_coeff.u12_9_u11_2_u2", "u12^9 u11^2 u2 has nonzero coefficient in the discriminant", "true",
        [] { return b(a11_coeff(WeightedMonomial::parse("u12^9 u11^2 u2")) != 0); });
    add("disc.a11_coeff.wrong_weight", "the discriminant is quasihomogeneous of weight 132", "0",
        [] { return a11_coeff(WeightedMonomial::parse("u12^10 u11")).get_str(); });
    add("disc.rigidity.all_nonzero", "the eleven rigidity monomials have nonzero coefficients", "11", [] {
        long nz = 0;
        for (const auto& m : rigidity_monomials()) nz += a11_coeff(m) != 0;
        return std::to_string(nz);
    });
    add("disc.a11_coeff.u12_11", "coefficient of u12^11 is 12^12", "8916100448256",
        [] { return a11_coeff(WeightedMonomial::parse("u12^11")).get_str(); });
    add("disc.quasihomogeneity", "delta(l^i u_i) = l^132 delta(u) on 100 samples", "true",
        [] { return b(quasihomogeneity_check(100, 3)); });

    // Residues
    add("hodge.jacobian_dim.fermat.grade3", "h^{2,2} of the cubic fourfold comes from 20 cubics", "20",
        [] { return std::to_string(jacobian_dim(fermat_fourfold(false), 3)); });
    add("hodge.piece.fermat.q1", "h^{3,1} of the cubic fourfold is 1", "1",
        [] { return std::to_string(hodge_piece_dim(fermat_fourfold(false), 1)); });
    add("hodge.chordal_fiber", "the chordal E1 fiber has 2-dimensional middle cohomology", "q1 1, q2 1, total 2", [] {
        const auto h = chordal_fiber();
        const auto t = total_row(h);
        long total = 0;
        for (long x : t) total += x;
        return "q1 " + std::to_string(hodge_piece_dim(h, 1)) + ", q2 " + std::to_string(hodge_piece_dim(h, 2)) +
               ", total " + std::to_string(total);
    });
    add("hodge.nodal_fiber.basis", "the nodal E1 fiber q = 2 piece is spanned by zs and s^3", "2: s^3 zs", [] {
        const auto h = nodal_fiber(false);
        std::string out = std::to_string(hodge_piece_dim(h, 2)) + ":";
        for (const auto& e : monomial_basis(h, residue_grade(h, 2)))
            out += " " + monomial_name(e, {"y1", "y2", "y3", "y4", "z", "s"});
        return out;
    });
    add("hodge.fermat.omega_eigenspace", "the w-eigenspace summands are one- and ten-dimensional", "q1 1, q2 10", [] {
        const auto h = fermat_fourfold(true);
        return "q1 " + std::to_string(eigen_hodge_dim(h, 1, SixthRoot::omega())) + ", q2 " +
               std::to_string(eigen_hodge_dim(h, 2, SixthRoot::omega()));
    });
    add("hodge.curve_c.eigenspace", "on C the -wbar eigenspace has dimensions 1 and 9", "(1,9)",
        [] { return counts(eigen_row(curve_c(), SixthRoot(1))); });
    add("hodge.nodal_fiber.eigenvalues", "zs and s^3 have eigenvalues w^2 and w", "s^3 w, zs wb; dims w 1, wb 1", [] {
        const auto h = nodal_fiber(true);
        std::string out;
        for (const auto& e : monomial_basis(h, residue_grade(h, 2))) {
            int k = 0;
            for (std::size_t i = 0; i < e.size(); ++i) k += h.chi(i).exponent() * static_cast<int>(e[i] + 1);
            out += (out.empty() ? "" : ", ") + monomial_name(e, {"y1", "y2", "y3", "y4", "z", "s"}) + " " +
                   SixthRoot(k).to_string();
        }
        const EigenCounts d = eigen_hodge_dims(h, 2);
        return out + "; dims w " + std::to_string(d[2]) + ", wb " + std::to_string(d[4]);
    });
    add("hodge.threefold_z.omega", "the w-part of H^3(Z) has Hodge numbers (0,1,9,0,0)", "(0,1,9,0,0)",
        [] { return counts(eigen_row(threefold_z(), SixthRoot::omega())); });
    add("hodge.fermat.full", "the cubic fourfold has Hodge numbers (0,1,20,1,0)", "(0,1,20,1,0)",
        [] { return counts(total_row(fermat_fourfold(false))); });

    // Interchange
    add("cli.parse_lattice.lambda", "the named lattice lambda is the displayed Gram matrix", "true", [] {
        const HermGram l = lambda();
        return b(load_lattice("lambda") == l && herm_gram_from_json(to_json(l)) == l);
    });
    return c;
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
    static const std::vector<CheckSpec> registry = build_registry();
    return registry;
}

VerificationReport run_verify(const std::string& filter) {
    VerificationReport r;
    for (const auto& spec : check_registry()) {
        if (!filter.empty() && spec.name.find(filter) == std::string::npos) continue;
        Check c{spec.name, spec.anchor, spec.expected, {}, false};
        try {
            c.computed = spec.compute();
        } catch (const std::exception& e) {
            c.computed = std::string("error: ") + e.what();
        }
        c.pass = c.computed == c.expected;
        (c.pass ? r.passed : r.failed) += 1;
        r.checks.push_back(std::move(c));
    }
    return r;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"anchor", c.anchor}, {"expected", c.expected}, {"computed", c.computed},
                          {"pass", c.pass}});
    return {{"checks", std::move(checks)},
            {"summary", {{"total", r.checks.size()}, {"passed", r.passed}, {"failed", r.failed}}}};
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
        if (!c.pass) os << "     expected: " << c.expected << "\n     computed: " << c.computed << "\n";
    }
    os << r.passed << " passed, " << r.failed << " failed, " << r.checks.size() << " total\n";
    return os.str();
}

}  // namespace eislat
