#pragma once

// JSON interchange: EisensteinInt = [a, b]; Gram matrices = {"n": n, "g": rows}.
// Integers outside the 64-bit range are written as decimal strings and both
// forms are accepted on input.

#include "eislat/lattice.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace eislat {

/// Malformed or inconsistent input data.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const mpz_class& x);
nlohmann::json to_json(const EisensteinInt& x);
nlohmann::json to_json(const HermGram& g);
nlohmann::json to_json(const ZGram& g);
nlohmann::json to_json(const HermVector& v);

mpz_class mpz_from_json(const nlohmann::json& j);
EisensteinInt eisenstein_from_json(const nlohmann::json& j);
/// Throws InputError naming the entry that breaks conjugate symmetry.
HermGram herm_gram_from_json(const nlohmann::json& j);
ZGram z_gram_from_json(const nlohmann::json& j);

/// Reads a HermGram from a JSON file.
HermGram parse_lattice_file(const std::string& path);

/// A named lattice (see named_lattice) or, when `spec` names an existing file
/// or ends in ".json", a HermGram JSON file. Throws InputError.
HermGram load_lattice(const std::string& spec);

}  // namespace eislat
