#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace holder {

struct CheckResult {
    std::string name;
    bool pass = false;
    nlohmann::json measured = nlohmann::json::object();
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
    nlohmann::json to_json() const;
};

/// theta, criterion-equivalence, meyer, cex1, fabe, monofractal
const std::vector<std::string>& suite_names();

/// Runs one named suite; throws domain_error for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed = 1234567);

SuiteResult verify_theta(std::uint64_t seed, int sequences = 100);
SuiteResult verify_criterion_equivalence(std::uint64_t seed, int pyramids = 1000);
SuiteResult verify_meyer();
SuiteResult verify_cex1();
SuiteResult verify_fabe();
SuiteResult verify_monofractal();

} // namespace holder
