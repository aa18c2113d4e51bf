#include <doctest.h>

#include "support/properties.hpp"
#include "support/random_semigroups.hpp"

TEST_SUITE("properties") {

TEST_CASE("invariant battery over random plane semigroups") {
    auto pool = testsupport::random_plane_semigroups(60, 20260819);
    for (const auto& gens : testsupport::corpus_plane_semigroups()) pool.push_back(gens);

    const auto stats = testsupport::run_plane_properties(pool);
    CHECK(stats.cases == static_cast<int>(pool.size()));
    // the pool must exercise both sides of the reduction dichotomy
    CHECK(stats.with_reduction > 0);
    CHECK(stats.with_reduction < stats.cases);
    CHECK(stats.graded_cm > 0);

    for (const auto& v : stats.violations) MESSAGE(v);
    CHECK(stats.violations.empty());
}

}  // TEST_SUITE
