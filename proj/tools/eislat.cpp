// eislat: command-line front end.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 input-format error.

#include "eislat/discriminant.hpp"
#include "eislat/f3.hpp"
#include "eislat/json_io.hpp"
#include "eislat/linalg.hpp"
#include "eislat/monodromy.hpp"
#include "eislat/residue.hpp"
#include "eislat/verify.hpp"
#include "eislat/word.hpp"
#include "eislat/zlattice.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace eislat;
using nlohmann::json;

namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kInput = 3;

struct Options {
    bool json_out = false;
    std::string name;
    std::string lattice;
    std::string word;
    bool projective = false;
    bool mod_radical = false;
    std::string report = "order";
    std::vector<int> form;
    int norm = 0;
    std::size_t expect = 0;
    std::string monomial;
    std::vector<long> weights;
    long degree = 0;
    std::string mode = "monomial";
    std::vector<long> exponents;
    std::vector<std::string> character;
    std::string filter;
};


json inertia_json(const Inertia& i) { return json::array({i.positive, i.radical, i.negative}); }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

int emit(const Options& o, const json& j, const std::string& text) {
    if (o.json_out)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
    return 0;
}

int lattice_make(const Options& o) {
    const HermGram g = load_lattice(o.name);
    const json j = to_json(g);
    std::ostringstream os;
    for (std::size_t r = 0; r < g.rank(); ++r) {
        for (std::size_t c = 0; c < g.rank(); ++c) os << (c ? " " : "") << g(r, c);
        os << "\n";
    }
    return emit(o, j, os.str());
}

int lattice_info(const Options& o) {
    const HermGram g = load_lattice(o.lattice);
    json j;
    j["rank"] = g.rank();
    j["form_rank"] = form_rank(g);
    j["signature"] = inertia_json(signature(g));
    j["det_e"] = to_json(det_e(g));
    j["in_theta_dual"] = in_theta_dual(g);
    if (in_theta_dual(g) && !det_e(g).is_zero()) j["theta_self_dual"] = theta_self_dual(g);
    std::ostringstream os;
    os << "rank " << g.rank() << "\nform rank " << form_rank(g) << "\nsignature " << signature(g) << "\ndet_e "
       << det_e(g) << "\nin theta-dual " << (in_theta_dual(g) ? "yes" : "no") << "\n";
    if (j.contains("theta_self_dual")) os << "theta self-dual " << (theta_self_dual(g) ? "yes" : "no") << "\n";
    try {
        const ZGram z = z_realization(g);
        j["z_det"] = to_json(determinant(z));
        j["z_inertia"] = inertia_json(inertia(z));
        j["z_even"] = is_even(z);
        os << "Z-realization det " << determinant(z) << ", inertia " << inertia(z) << ", even "
           << (is_even(z) ? "yes" : "no") << "\n";
    } catch (const std::invalid_argument&) {
        os << "Z-realization not integral\n";
    }
    return emit(o, j, os.str());
}

int word_order(const Options& o) {
    const Ambient g = make_ambient(load_lattice(o.lattice));
    Word w;
    try {
        w = parse_word(o.word);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    GroupElt m = GroupElt::identity(g);
    try {
        m = eval_word(g, w);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const OrderResult r = o.projective ? projective_order(m, o.mod_radical) : order(m);
    json j{{"word", to_string(w)},
           {"length", word_length(w)},
           {"projective", o.projective},
           {"mod_radical", o.mod_radical},
           {"order", r.to_string()}};
    std::string scalar_text;
    if (o.projective && r.kind == OrderResult::Kind::Finite) {
        if (const auto sc = scalar_of(m.pow(r.value), o.mod_radical)) {
            j["scalar"] = sc->to_string();
            scalar_text = "scalar at that power " + sc->to_string() + "\n";
        }
    }
    return emit(o, j,
                "word length " + std::to_string(word_length(w)) + "\n" + (o.projective ? "projective order " : "order ") +
                    r.to_string() + "\n" + scalar_text);
}

int closure(const Options& o) {
    const Ambient g = make_ambient(load_lattice(o.lattice));
    const FiniteGroup grp = group_closure(basis_triflections(g));
    json j{{"order", grp.size()}};
    std::ostringstream os;
    os << "order " << grp.size() << "\n";
    for (const auto& item : split(o.report, ',')) {
        if (item == "order") continue;
        if (item == "reflections") {
            const auto refl = reflections_in(grp);
            json list = json::array();
            for (const auto& r : refl)
                list.push_back({{"root", to_json(r.root)}, {"rotation", r.rotation.to_string()}, {"norm", to_json(r.root_norm)}});
            j["reflections"] = list;
            j["mirrors"] = mirror_roots(refl).size();
            os << "reflections " << refl.size() << "\nmirrors " << mirror_roots(refl).size() << "\n";
        } else if (item == "free") {
            const bool f = free_action_check(grp);
            j["free_action"] = f;
            os << "free action " << (f ? "yes" : "no") << "\n";
        } else {
            throw CLI::ValidationError("--report", "unknown item '" + item + "' (order, reflections, free)");
        }
    }
    return emit(o, j, os.str());
}

json f3_matrix(const Matrix<F3>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).balanced());
        rows.push_back(row);
    }
    return rows;
}

std::string f3_text(const F3Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i].balanced());
    return s + ")";
}

int disc_group_cmd(const Options& o) {
    const F3QuadSpace s = disc_group(load_lattice(o.lattice));
    std::ostringstream os;
    os << "F_3^" << s.k << " with form\n";
    for (std::size_t i = 0; i < s.k; ++i) {
        for (std::size_t j = 0; j < s.k; ++j) os << (j ? " " : "") << s.q(i, j).balanced();
        os << "\n";
    }
    return emit(o, json{{"k", s.k}, {"form", f3_matrix(s.q)}}, os.str());
}

int norm_enum(const Options& o) {
    const F3QuadSpace s = diagonal_space(o.form);
    const auto vs = enumerate_norm(s, F3(o.norm));
    json list = json::array();
    std::ostringstream os;
    for (const auto& v : vs) {
        json row = json::array();
        for (const auto x : v) row.push_back(x.balanced());
        list.push_back(row);
        os << f3_text(v) << "\n";
    }
    os << vs.size() << " vectors\n";
    return emit(o, json{{"count", vs.size()}, {"vectors", list}}, os.str());
}

int orbit_cmd(const Options& o) {
    const HermGram g = load_lattice(o.lattice);
    F3Vector start(g.rank());
    if (!start.empty()) start[0] = 1;
    const std::size_t target = o.expect ? o.expect : static_cast<std::size_t>(-1);
    const OrbitSearch r = grow_hyperplane_orbit(g, start, target);
    const bool ok = o.expect == 0 || r.orbit == o.expect;
    emit(o, json{{"orbit", r.orbit}, {"generators", r.generators}, {"expected", o.expect ? json(o.expect) : json()}, {"pass", ok}},
         "orbit " + std::to_string(r.orbit) + " using " + std::to_string(r.generators) + " roots\n" +
             (o.expect ? std::string(ok ? "matches " : "differs from ") + std::to_string(o.expect) + "\n" : ""));
    return ok ? 0 : kCheckFailed;
}

int a11_coeff_cmd(const Options& o) {
    WeightedMonomial m;
    try {
        m = WeightedMonomial::parse(o.monomial);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const mpz_class c = a11_coeff(m);
    return emit(o, json{{"monomial", m.to_string()}, {"weight", m.weight()}, {"coefficient", c.get_str()}},
                m.to_string() + " (weight " + std::to_string(m.weight()) + "): " + c.get_str() + "\n");
}

int rigidity_cmd(const Options& o) {
    json list = json::array();
    std::ostringstream os;
    bool all = true;
    for (const auto& m : rigidity_monomials()) {
        const mpz_class c = a11_coeff(m);
        all = all && c != 0;
        list.push_back({{"monomial", m.to_string()}, {"coefficient", c.get_str()}});
        os << m.to_string() << ": " << c << "\n";
    }
    os << (all ? "all nonzero\n" : "some coefficient vanishes\n");
    emit(o, json{{"coefficients", list}, {"all_nonzero", all}}, os.str());
    return all ? 0 : kCheckFailed;
}

int hodge_cmd(const Options& o) {
    WeightedHypersurface h;
    h.weights = o.weights;
    h.degree = o.degree;
    if (o.mode == "monomial") {
        h.mode = WeightedHypersurface::Mode::Monomial;
        h.exponents = o.exponents;
        if (h.exponents.empty())
            for (const long w : h.weights) h.exponents.push_back(w > 0 ? h.degree / w : 0);
    } else {
        h.mode = WeightedHypersurface::Mode::GenericCI;
    }
    try {
        for (const auto& c : o.character) h.character.push_back(SixthRoot::parse(c));
        h.validate();
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    json rows = json::array();
    std::ostringstream os;
    os << "q  grade  total";
    for (int k = 0; k < 6; ++k) os << "  " << SixthRoot(k).to_string();
    os << "\n";
    for (const auto& r : full_report(h)) {
        json by = json::object();
        for (int k = 0; k < 6; ++k) by[SixthRoot(k).to_string()] = r.by_eigenvalue[static_cast<std::size_t>(k)];
        rows.push_back({{"q", r.q}, {"grade", r.grade}, {"total", r.total}, {"by_eigenvalue", by}});
        os << r.q << "  " << r.grade << "  " << r.total;
        for (int k = 0; k < 6; ++k) os << "  " << r.by_eigenvalue[static_cast<std::size_t>(k)];
        os << "\n";
    }
    return emit(o, json{{"dimension", h.dimension()}, {"rows", rows}}, os.str());
}

int verify_cmd(const Options& o) {
    const VerificationReport r = run_verify(o.filter);
    emit(o, to_json(r), to_text(r));
    return r.all_passed() ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eisenstein lattices, monodromy and Hodge-theoretic checks for cubic threefolds"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json_out, "Machine-readable JSON output");
    app.footer("Lattices are named (lambda, lambda10, e8e, hyp, chain:N, diag:a,b,... and '+' sums) or JSON files "
               "{\"n\": n, \"g\": [[[a,b],...],...]}.\nEISLAT_CLOSURE_CAP caps group closures (default 2000000).\n"
               "Exit codes: 0 success, 1 check failure, 2 usage error, 3 input-format error.");

    std::function<int()> action;
    auto bind = [&](CLI::App* sub, int (*f)(const Options&)) { sub->callback([&action, f, &o] { action = [f, &o] { return f(o); }; }); };

    auto* lat = app.add_subcommand("lattice", "Hermitian lattices");
    lat->require_subcommand(1);
    auto* make = lat->add_subcommand("make", "Print the Gram matrix of a named lattice");
    make->add_option("--name", o.name, "Lattice name or JSON file")->required();
    bind(make, lattice_make);
    auto* info = lat->add_subcommand("info", "Rank, signature, determinant and Z-realization invariants");
    info->add_option("--lattice", o.lattice, "Lattice name or JSON file")->required();
    bind(info, lattice_info);

    auto* mono = app.add_subcommand("monodromy", "Reflections, words and finite groups");
    mono->require_subcommand(1);
    auto* wo = mono->add_subcommand("word-order", "Order of a word in the basis triflections a1, a2, ...");
    wo->add_option("--lattice", o.lattice, "Lattice name or JSON file")->required();
    wo->add_option("--word", o.word, "Word, e.g. \"a1..a10 a11^2 a10..a1\" or \"(a1 a2)^3\"")->required();
    wo->add_flag("--projective", o.projective, "Order modulo scalars");
    wo->add_flag("--mod-radical", o.mod_radical, "Compare modulo the radical (with --projective)");
    bind(wo, word_order);
    auto* cl = mono->add_subcommand("closure", "Enumerate the group generated by the basis triflections");
    cl->add_option("--lattice", o.lattice, "Lattice name or JSON file")->required();
    cl->add_option("--report", o.report, "Comma-separated: order, reflections, free")->capture_default_str();
    bind(cl, closure);

    auto* f3 = app.add_subcommand("f3", "Finite quadratic spaces over F_3");
    f3->require_subcommand(1);
    auto* dg = f3->add_subcommand("disc-group", "theta N*/N with its F_3 form");
    dg->add_option("--lattice", o.lattice, "Lattice name or JSON file")->required();
    bind(dg, disc_group_cmd);
    auto* ne = f3->add_subcommand("norm-enum", "Vectors of a given norm in a diagonal F_3 space");
    ne->add_option("--form", o.form, "Diagonal entries, e.g. 1,-1,1")->required()->delimiter(',');
    ne->add_option("--norm", o.norm, "Norm in F_3")->required();
    bind(ne, norm_enum);
    auto* ob = f3->add_subcommand("orbit", "Orbit of a hyperplane mod theta under root transvections");
    ob->add_option("--lattice", o.lattice, "Lattice name or JSON file")->required();
    ob->add_option("--expect", o.expect, "Expected orbit size; exit 1 on mismatch");
    bind(ob, orbit_cmd);

    auto* disc = app.add_subcommand("disc", "Discriminant of s^12 + u2 s^10 + ... + u12");
    disc->require_subcommand(1);
    auto* ac = disc->add_subcommand("a11-coeff", "Exact coefficient of a monomial in u2..u12");
    ac->add_option("--monomial", o.monomial, "e.g. \"u12^9 u11^2 u2\"")->required();
    bind(ac, a11_coeff_cmd);
    auto* rh = disc->add_subcommand("check-rigidity-hypothesis", "Coefficients of u12^11 and u12^(11-i) u11^i ui");
    bind(rh, rigidity_cmd);

    auto* hodge = app.add_subcommand("hodge", "Residue Hodge numbers of weighted hypersurfaces");
    hodge->require_subcommand(1);
    auto* rep = hodge->add_subcommand("report", "Hodge numbers split by automorphism eigenvalue");
    rep->add_option("--weights", o.weights, "Weights, e.g. 3,3,3,2,1")->required()->delimiter(',');
    rep->add_option("--degree", o.degree, "Degree")->required();
    rep->add_option("--mode", o.mode, "monomial or generic")
        ->check(CLI::IsMember({"monomial", "generic"}))
        ->capture_default_str();
    rep->add_option("--exponents", o.exponents, "Monomial exponents (default degree/weight)")->delimiter(',');
    rep->add_option("--char", o.character, "Sixth roots 1,-1,w,-w,wb,-wb per variable")->delimiter(',');
    bind(rep, hodge_cmd);

    auto* ver = app.add_subcommand("verify", "Run the reproduction checks");
    ver->add_option("--filter", o.filter, "Only checks whose name contains this text");
    bind(ver, verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }
    try {
        return action ? action() : kUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
}
