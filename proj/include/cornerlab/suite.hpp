#pragma once

/**
 * @file suite.hpp
 * @brief The seeded acceptance battery and the randomized property checks,
 * shared by `corner-lab suite` and the test binaries.
 */

#include "cornerlab/random.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cornerlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string detail;  ///< first failure, or a summary
    double seconds = 0;
    double budget_seconds = 0;  ///< 0 when the criterion has no time limit
};

/// Runs one criterion (1..9). Exact checks and the time budget must both pass.
CriterionResult run_criterion(int id, const SampleConfig& cfg);

/// Runs the selected criteria in order (all nine when ids is empty),
/// calling on_done after each.
std::vector<CriterionResult> run_suite(const std::vector<int>& ids, const SampleConfig& cfg,
                                       const std::function<void(const CriterionResult&)>& on_done = {});

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

/// Names of the randomized properties, in execution order.
std::vector<std::string> property_names();
/// Runs one property over `cases` seeded cases; throws std::invalid_argument on an unknown name.
PropertyResult run_property(const std::string& name, std::size_t cases, std::uint64_t seed);

}  // namespace cornerlab
