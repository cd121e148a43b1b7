#include <doctest.h>

#include "helpers.hpp"
#include "incflow/exact.hpp"
#include "incflow/families.hpp"
#include "incflow/gen.hpp"
#include "incflow/verify.hpp"

using namespace incflow;

TEST_CASE("exact solvers on fixtures") {
    Network p2 = test::p2_network();
    auto dp = exact_subset_dp(p2, 3);
    CHECK(dp.optimum == 8);
    CHECK(dp.schedule == BuildSchedule{2, 1});
    CHECK(brute_force_permutations(p2, 3).optimum == 8);

    Network d = test::diamond_network();
    CHECK(exact_subset_dp(d, 2).optimum == 1);

    X3CInstance x{1, {{{1, 2, 3}}}};
    Instance inst = gen_x3c(x, 2);
    CHECK(exact_subset_dp(inst.net, 2).optimum == 3);

    // empty potential set
    Network flat;
    flat.node_count = 2;
    flat.source = 0;
    flat.sink = 1;
    flat.arcs = {{0, 0, 1, 2, ArcKind::Existing}};
    CHECK(exact_subset_dp(flat, 4).optimum == 8);
    CHECK(brute_force_permutations(flat, 4).optimum == 8);
}

TEST_CASE("evaluate_schedule confirms the DP optimum and schedule") {
    for (int i = 0; i < 30; ++i) {
        Instance inst = fuzz_instance(515, i, {8, {1, 3, 10}, true});
        auto dp = exact_subset_dp(inst.net, inst.horizon);
        auto rep = make_report(inst.net, inst.horizon, "check", dp.schedule);
        CHECK(rep.total == dp.optimum);
    }
}

TEST_CASE("subset DP equals permutation brute force") {
    for (int i = 0; i < 60; ++i) {
        Instance inst = fuzz_instance(616, i, {8, {1, 3, 10}, true});
        CHECK(exact_subset_dp(inst.net, inst.horizon).optimum ==
              brute_force_permutations(inst.net, inst.horizon).optimum);
    }
}

TEST_CASE("size caps") {
    FamilyInstance f2 = gen_family(Family::F2, 10);  // 40 potential arcs
    CHECK_THROWS_AS(exact_subset_dp(f2.inst.net, f2.inst.horizon), TooLarge);
    CHECK_THROWS_AS(brute_force_permutations(f2.inst.net, f2.inst.horizon), TooLarge);
}

TEST_CASE("short horizons build only T-1 arcs") {
    // F2 carries T = 2k+2 < |A_p| = 4k; the DP must respect the cutoff
    FamilyInstance f2 = gen_family(Family::F2, 2);
    auto dp = exact_subset_dp(f2.inst.net, f2.inst.horizon, 10);
    CHECK(dp.optimum == 6);  // 2k+2 at k=2
    CHECK(static_cast<std::int64_t>(dp.schedule.size()) == f2.inst.horizon - 1);
}

TEST_CASE("certified lower bound") {
    FamilyInstance f5 = gen_family(Family::F5, 5);
    CHECK(certified_lower_bound(f5.inst.net, f5.inst.horizon, f5.certified) == 73);

    FamilyInstance f2 = gen_family(Family::F2, 10);
    CHECK(certified_lower_bound(f2.inst.net, f2.inst.horizon, f2.certified) == 22);

    for (int i = 0; i < 15; ++i) {
        Instance inst = fuzz_instance(717, i, {7, {1, 3}, true});
        auto dp = exact_subset_dp(inst.net, inst.horizon);
        BuildSchedule s = inst.net.potential_ids();
        CHECK(certified_lower_bound(inst.net, inst.horizon, s) <= dp.optimum);
    }
}
