#include "doctest.h"

#include "cornerlab/suite.hpp"

using namespace cornerlab;

TEST_CASE("randomized properties, 100 cases each") {
    const auto names = property_names();
    CHECK(names.size() >= 20);
    for (const auto& name : names) {
        const PropertyResult r = run_property(name, 100, 0xC0FFEE);
        INFO(name << ": " << r.first_failure);
        CHECK(r.cases == 100);
        CHECK(r.failures == 0);
    }
}

TEST_CASE("properties are reproducible and seed dependent") {
    const PropertyResult a = run_property("closure idempotence", 100, 7);
    const PropertyResult b = run_property("closure idempotence", 100, 7);
    CHECK(a.cases == b.cases);
    CHECK(a.failures == b.failures);
    CHECK_THROWS_AS(run_property("no such property", 1, 0), std::invalid_argument);
}
