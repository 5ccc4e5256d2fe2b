#pragma once

// Sweep drivers behind `verify-all` and the acceptance binary.

#include <optional>
#include <string>
#include <vector>

#include "dlcoh/report.hpp"

namespace dlcoh {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool exact = false;             // every check in the sweep held
    double seconds = 0;
    std::optional<double> limit;    // wall-clock budget, seconds
    std::size_t cells = 0;
    std::size_t failed_cells = 0;
    std::string detail;             // first failures, or a summary

    bool passed() const { return exact && (!limit || seconds < *limit); }
};

constexpr int kCriteria = 9;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all_criteria();

std::string format_line(const CriterionResult& r);

// les_euler_check over 2 <= n <= max_n, all d, all mu with |mu| = n-d <= max_mu.
Report les_sweep(int max_n, int max_mu = 6);

}  // namespace dlcoh
