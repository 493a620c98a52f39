#include "doctest.h"

#include "prop_suites.hpp"

TEST_CASE("randomized property suites run clean") {
    std::size_t total = 0;
    for (const auto& suite : rbd::props::run_all()) {
        INFO(suite.name);
        for (const auto& f : suite.failures) { INFO(f); }
        CHECK(suite.ok());
        total += suite.cases;
    }
    CHECK(total >= 10000);
}
