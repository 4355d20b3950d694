// Acceptance gate: runs every certified criterion end to end and requires
// them all to pass at the pinned tolerances.

#include <iostream>

#include "doctest.h"
#include "hypinvol/acceptance.hpp"

TEST_CASE("acceptance criteria") {
    const auto results = hypinvol::acceptance::run_all(std::cout);
    REQUIRE(results.size() == 9);
    for (const auto& r : results) {
        INFO("criterion ", r.id, " [", r.name, "]: ", r.notes);
        CHECK(r.pass);
    }
}
