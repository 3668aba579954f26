// The end-to-end acceptance checks, one result per criterion.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace unipotent {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;  // 0: no runtime bound
};

/// Runs criteria 1..13, or only those listed in `only`.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {},
                                            const std::function<void(const CriterionResult&)>& progress = {});

nlohmann::json acceptance_json(const std::vector<CriterionResult>& results);

/// "PASS  3 rank ... (0.12 s)"
std::string format_result(const CriterionResult& r);

}  // namespace unipotent
