#include "eislat/json_io.hpp"

#include "eislat/hermitian.hpp"

#include <filesystem>
#include <fstream>

namespace eislat {

using nlohmann::json;

json to_json(const mpz_class& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

json to_json(const EisensteinInt& x) { return json::array({to_json(x.a()), to_json(x.b())}); }

json to_json(const HermVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

json to_json(const HermGram& g) {
    json rows = json::array();
    for (std::size_t i = 0; i < g.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < g.rank(); ++j) row.push_back(to_json(g(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"n", g.rank()}, {"g", std::move(rows)}};
}

json to_json(const ZGram& g) {
    json rows = json::array();
    for (std::size_t i = 0; i < g.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < g.rank(); ++j) row.push_back(to_json(g(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"n", g.rank()}, {"g", std::move(rows)}};
}

mpz_class mpz_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        mpz_class x;
        if (x.set_str(j.get<std::string>(), 10) != 0) throw InputError("not an integer: \"" + j.get<std::string>() + "\"");
        return x;
    }
    throw InputError("expected an integer, got " + j.dump());
}

EisensteinInt eisenstein_from_json(const json& j) {
    if (j.is_array() && j.size() == 2) return {mpz_from_json(j[0]), mpz_from_json(j[1])};
    if (j.is_number_integer() || j.is_string()) return {mpz_from_json(j), 0};
    throw InputError("expected an Eisenstein integer [a, b], got " + j.dump());
}

namespace {

template <class T, class Entry>
Matrix<T> matrix_from_json(const json& j, Entry entry) {
    if (!j.is_object() || !j.contains("g")) throw InputError("expected an object with \"n\" and \"g\"");
    const json& rows = j.at("g");
    if (!rows.is_array()) throw InputError("\"g\" must be an array of rows");
    const std::size_t n = rows.size();
    if (j.contains("n")) {
        if (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() != n)
            throw InputError("\"n\" does not match the number of rows of \"g\"");
    }
    Matrix<T> m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n)
            throw InputError("row " + std::to_string(r) + " of \"g\" does not have " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) {
            try {
                m(r, c) = entry(rows[r][c]);
            } catch (const InputError& e) {
                throw InputError("entry (" + std::to_string(r) + "," + std::to_string(c) + "): " + e.what());
            }
        }
    }
    return m;
}

}  // namespace

HermGram herm_gram_from_json(const json& j) {
    auto m = matrix_from_json<EisensteinInt>(j, eisenstein_from_json);
    try {
        return HermGram(std::move(m));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

ZGram z_gram_from_json(const json& j) {
    auto m = matrix_from_json<mpz_class>(j, mpz_from_json);
    try {
        return ZGram(std::move(m));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

HermGram parse_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": malformed JSON: " + e.what());
    }
    try {
        return herm_gram_from_json(j);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

HermGram load_lattice(const std::string& spec) {
    const bool looks_like_file = spec.size() > 5 && spec.compare(spec.size() - 5, 5, ".json") == 0;
    if (looks_like_file || std::filesystem::is_regular_file(spec)) return parse_lattice_file(spec);
    try {
        return named_lattice(spec);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

}  // namespace eislat
