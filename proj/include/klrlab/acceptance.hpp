#pragma once

#include <string>
#include <vector>

namespace klrlab {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double budget = 0;  // seconds allowed
};

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();
// "PASS  3  title (detail) [1.23s / 30s]"
std::string format_line(const CriterionResult& r);

}  // namespace klrlab
