#pragma once

// Registered reproduction checks and the verification report.

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace eislat {

struct Check {
    std::string name;
    std::string anchor;  // the claim being reproduced
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerificationReport {
    std::vector<Check> checks;
    std::size_t passed = 0;
    std::size_t failed = 0;
    bool all_passed() const { return failed == 0; }
};

struct CheckSpec {
    std::string name;
    std::string anchor;
    std::string expected;
    std::function<std::string()> compute;
};

/// All checks in registration order.
const std::vector<CheckSpec>& check_registry();

/// Runs every check whose name contains `filter` (all when empty). A check that
/// throws is reported as failed with the exception text as its computed value.
VerificationReport run_verify(const std::string& filter = "");

nlohmann::json to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

}  // namespace eislat
