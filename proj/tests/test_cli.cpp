#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eislat/json_io.hpp"
#include "eislat/verify.hpp"
#include "eislat/word.hpp"
#include "eislat/hermitian.hpp"

#include <cstdio>
#include <fstream>
#include <set>

using namespace eislat;
using nlohmann::json;

TEST_CASE("word parsing") {
    const Word w = parse_word("a1..a10 a11^2 a10..a1");
    CHECK(word_length(w) == 22);
    CHECK(w.size() == 21);
    CHECK(w[10] == Letter{11, 2});
    CHECK(w.front() == Letter{1, 1});
    CHECK(w.back() == Letter{1, 1});
    CHECK(parse_word("a3..a1") == Word{{3, 1}, {2, 1}, {1, 1}});
    CHECK(word_length(parse_word("(a1 a2)^3")) == 6);
    CHECK(parse_word("(a1 a2)^-1") == Word{{2, -1}, {1, -1}});
    CHECK(parse_word("a2^0").empty());
    CHECK(parse_word("").empty());
    CHECK(to_string(parse_word("a1 a2^-2")) == "a1 a2^-2");
    CHECK_THROWS_AS(parse_word("b1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("a0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("(a1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("a1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("a1^"), std::invalid_argument);
}

TEST_CASE("word evaluation") {
    const Ambient g = make_ambient(chain(3));
    const auto a = basis_triflections(g);
    CHECK(eval_word(g, parse_word("a1 a2")) == a[0] * a[1]);
    CHECK(eval_word(g, parse_word("a2^-1 a2")).is_identity());
    CHECK(eval_word(g, parse_word("a1^3")).is_identity());
    CHECK_THROWS_AS(eval_word(g, parse_word("a4")), std::invalid_argument);
}

TEST_CASE("JSON for Eisenstein integers and Gram matrices") {
    CHECK(to_json(EisensteinInt(2, -1)) == json::parse("[2,-1]"));
    const mpz_class big("123456789012345678901234567890");
    CHECK(to_json(EisensteinInt(big, 1)) == json::parse(R"(["123456789012345678901234567890",1])"));
    CHECK(eisenstein_from_json(json::parse(R"(["123456789012345678901234567890",1])")) == EisensteinInt(big, 1));
    CHECK(eisenstein_from_json(json(5)) == EisensteinInt(5));
    CHECK_THROWS_AS(eisenstein_from_json(json::parse("[1,2,3]")), InputError);
    CHECK_THROWS_AS(mpz_from_json(json("12x")), InputError);
    for (const HermGram& g : {lambda(), lambda10(), chain(5), hyp()}) CHECK(herm_gram_from_json(to_json(g)) == g);
    const json hyp_json = to_json(hyp());
    CHECK(hyp_json["n"] == 2);
    CHECK(hyp_json["g"][0][1] == json::parse("[1,2]"));
}

TEST_CASE("asymmetric Gram files are rejected with the entry named") {
    const std::string path = "eislat_test_asym.json";
    {
        std::ofstream out(path);
        out << R"({"n": 2, "g": [[3, [1, 2]], [[1, 2], 3]]})";
    }
    try {
        parse_lattice_file(path);
        FAIL("accepted an asymmetric Gram");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
    }
    std::remove(path.c_str());
    CHECK_THROWS_AS(herm_gram_from_json(json::parse(R"({"n": 3, "g": [[3]]})")), InputError);
    CHECK_THROWS_AS(herm_gram_from_json(json::parse(R"({"g": [[3, 1]]})")), InputError);
    CHECK_THROWS_AS(load_lattice("nonexistent.json"), InputError);
    CHECK_THROWS_AS(load_lattice("leech"), InputError);
    CHECK(load_lattice("lambda") == lambda());
}

TEST_CASE("malformed JSON is an input error") {
    const std::string path = "eislat_test_bad.json";
    {
        std::ofstream out(path);
        out << "{\"n\": 1, \"g\": [[3]";
    }
    CHECK_THROWS_AS(parse_lattice_file(path), InputError);
    std::remove(path.c_str());
}

TEST_CASE("ZGram JSON") {
    Matrix<mpz_class> m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = m(1, 0) = -1;
    m(1, 1) = 2;
    const ZGram z(m);
    CHECK(z_gram_from_json(to_json(z)) == z);
    CHECK_THROWS_AS(z_gram_from_json(json::parse(R"({"g": [[1, 2], [3, 4]]})")), InputError);
}

TEST_CASE("registry") {
    const auto& reg = check_registry();
    CHECK(reg.size() >= 25);
    std::set<std::string> names;
    for (const auto& c : reg) {
        CHECK(names.insert(c.name).second);
        CHECK(!c.anchor.empty());
        CHECK(!c.expected.empty());
    }
}

TEST_CASE("verify filters") {
    const VerificationReport none = run_verify("nonexistent");
    CHECK(none.checks.empty());
    CHECK(none.all_passed());
    const VerificationReport lam = run_verify("lambda");
    CHECK(lam.checks.size() >= 4);
    bool sig = false, det = false, zdet = false;
    for (const auto& c : lam.checks) {
        CAPTURE(c.name);
        sig = sig || c.name == "hermitian.signature.lambda";
        det = det || c.name == "hermitian.det_e.lambda";
        zdet = zdet || c.name == "hermitian.z_realization_det.lambda";
        if (c.name.rfind("hermitian.", 0) == 0) CHECK(c.pass);
    }
    CHECK(sig);
    CHECK(det);
    CHECK(zdet);
}

TEST_CASE("verify is deterministic") {
    CHECK(to_json(run_verify("hodge")).dump() == to_json(run_verify("hodge")).dump());
    const json j = to_json(run_verify("zlattice"));
    CHECK(j.contains("checks"));
    CHECK(j["summary"]["total"] == j["checks"].size());
    for (const auto& c : j["checks"])
        for (const char* k : {"name", "anchor", "expected", "computed", "pass"}) CHECK(c.contains(k));
}
