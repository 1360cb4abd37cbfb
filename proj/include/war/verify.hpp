#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace war {

// One verified equality: an expected value from a closed form or pinned
// constant against the value observed by enumeration or construction.
struct Claim {
    std::string id;
    nlohmann::json params;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct CriterionResult {
    int index = 0;
    std::string name;
    std::vector<Claim> claims;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<Claim> claims;
    bool pass = false;
};

int criterion_count();

// index in 1..criterion_count(). jobs shards the censuses (results are
// identical for any value). max_n > 0 caps census deck sizes, skipping
// checks that need more; 0 runs everything at full size.
CriterionResult run_criterion(int index, int jobs = 1, int max_n = 0);

std::vector<std::string> suite_names();  // all, s3, s4, s5, s6, s7
SuiteResult run_suite(const std::string& suite, int jobs = 1, int max_n = 0);

nlohmann::json to_json(const Claim& claim);
nlohmann::json to_json(const SuiteResult& result);

}  // namespace war
