#pragma once

#include <string>
#include <vector>

namespace mincone {

struct CriterionResult {
    int id = 0;
    bool pass = false;
    std::string detail;
    double elapsed_ms = 0.0;
};

// Runs the twelve acceptance criteria. Work items whose documented budget
// exceeds `budget_seconds` are skipped and reported as such in the detail.
std::vector<CriterionResult> run_acceptance(double budget_seconds = 600.0);

std::string render_acceptance(const std::vector<CriterionResult>& results);

} // namespace mincone
