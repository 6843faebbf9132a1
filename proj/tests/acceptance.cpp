// Runs the nine acceptance criteria and prints one line per criterion.
// Exits nonzero if any criterion fails.

#include "cornerlab/suite.hpp"

#include <cstdio>

using namespace cornerlab;

int main() {
    const SampleConfig cfg;
    int failed = 0;
    run_suite({}, cfg, [&](const CriterionResult& r) {
        char budget[32] = "none";
        if (r.budget_seconds > 0) std::snprintf(budget, sizeof budget, "%.0f s", r.budget_seconds);
        std::printf("criterion %d %s: %s (%zu checks, %zu failures, %.2f s, budget %s) %s\n", r.id,
                    r.name.c_str(), r.passed ? "PASS" : "FAIL", r.cases, r.failures, r.seconds, budget,
                    r.passed ? "" : r.detail.c_str());
        std::fflush(stdout);
        failed += !r.passed;
    });
    return failed == 0 ? 0 : 1;
}
