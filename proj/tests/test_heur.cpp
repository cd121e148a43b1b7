#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "incflow/exact.hpp"
#include "incflow/families.hpp"
#include "incflow/heur.hpp"
#include "incflow/verify.hpp"

using namespace incflow;

TEST_CASE("evaluate_schedule fixtures") {
    Network d = test::diamond_network();
    auto rep = evaluate_schedule(d, 2, {1});
    CHECK(rep.period_flows == std::vector<std::int64_t>{0, 1});
    CHECK(rep.total == 1);

    Network p2 = test::p2_network();
    auto rep2 = evaluate_schedule(p2, 3, {2, 1});
    CHECK(rep2.period_flows == std::vector<std::int64_t>{1, 3, 4});
    CHECK(rep2.total == 8);

    auto empty = evaluate_schedule(p2, 5, {});
    CHECK(empty.total == 5 * 1);  // T * f

    CHECK_THROWS_AS(evaluate_schedule(p2, 2, {1, 2}), HorizonTooShort);
    CHECK_THROWS_AS(evaluate_schedule(p2, 4, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_schedule(p2, 4, {0}), std::invalid_argument);
}

TEST_CASE("period flows never decrease") {
    std::mt19937 shuffle_rng(99);
    for (int i = 0; i < 30; ++i) {
        Instance inst = fuzz_instance(808, i, {8, {1, 3, 10}, true});
        BuildSchedule s = inst.net.potential_ids();
        std::shuffle(s.begin(), s.end(), shuffle_rng);
        auto rep = evaluate_schedule(inst.net, inst.horizon, s);
        for (std::size_t k = 1; k < rep.period_flows.size(); ++k)
            CHECK(rep.period_flows[k] >= rep.period_flows[k - 1]);
        std::int64_t sum = 0;
        for (auto [lvl, cnt] : rep.trace) sum += cnt;
        CHECK(sum == inst.horizon);
    }
}

TEST_CASE("quickest_increment fixtures") {
    Network p2 = test::p2_network();
    auto rep = quickest_increment(p2, 3);
    CHECK(rep.schedule == BuildSchedule{2, 1});
    CHECK(rep.total == 8);

    FamilyInstance f3 = gen_family(Family::F3, 10);
    CHECK(quickest_increment(f3.inst.net, f3.inst.horizon).total == 22);

    FamilyInstance f5 = gen_family(Family::F5, 5);
    CHECK(quickest_increment(f5.inst.net, f5.inst.horizon).total == 59);
}

TEST_CASE("within-batch order does not change period flows") {
    std::mt19937 shuffle_rng(7);
    for (int i = 0; i < 15; ++i) {
        Instance inst = fuzz_instance(909, i);
        std::int64_t f = initial_flow(inst.net);
        std::int64_t F = ultimate_flow(inst.net);
        if (f == F) continue;
        auto rep = quickest_increment(inst.net, inst.horizon);

        // recover batch boundaries from the trace, permute inside each batch
        std::vector<int> built;
        BuildSchedule permuted;
        std::size_t pos = 0;
        std::int64_t current = f;
        while (pos < rep.schedule.size()) {
            auto ma = min_arcs(inst.net, built, current + 1);
            REQUIRE(ma.has_value());
            std::size_t len = static_cast<std::size_t>(ma->z_star);
            std::vector<int> batch(rep.schedule.begin() + static_cast<std::ptrdiff_t>(pos),
                                   rep.schedule.begin() + static_cast<std::ptrdiff_t>(pos + len));
            std::shuffle(batch.begin(), batch.end(), shuffle_rng);
            for (int id : batch) permuted.push_back(id);
            for (std::size_t j = pos; j < pos + len; ++j) built.push_back(rep.schedule[j]);
            std::sort(built.begin(), built.end());
            current = max_flow_built(inst.net, built).value;
            pos += len;
        }
        auto again = make_report(inst.net, inst.horizon, "permuted", permuted);
        CHECK(again.period_flows == rep.period_flows);
    }
}

TEST_CASE("quickest_increment_poly fixtures") {
    Network d = test::diamond_network();
    auto rep = quickest_increment_poly(d, 2);
    CHECK(rep.schedule == BuildSchedule{1});
    CHECK(rep.total == 1);

    FamilyInstance f1 = gen_family(Family::F1, 1);
    auto r1 = quickest_increment_poly(f1.inst.net, f1.inst.horizon);
    REQUIRE(!r1.schedule.empty());
    CHECK(r1.schedule.front() == 5);  // builds the lower arc first

    // reaches the ultimate flow on general capacities
    for (int i = 0; i < 20; ++i) {
        Instance inst = fuzz_instance(111, i, {8, {1, 3, 10}, true});
        auto rep2 = quickest_increment_poly(inst.net, inst.horizon);
        CHECK(rep2.period_flows.back() == ultimate_flow(inst.net));
    }
}

TEST_CASE("quickest_to_ultimate fixtures") {
    FamilyInstance f2 = gen_family(Family::F2, 10);
    CHECK(quickest_to_ultimate(f2.inst.net, f2.inst.horizon).total == 14);

    FamilyInstance f3 = gen_family(Family::F3, 10);
    CHECK(quickest_to_ultimate(f3.inst.net, f3.inst.horizon).total == 30);

    Network p2 = test::p2_network();
    auto rep = quickest_to_ultimate(p2, 3);
    CHECK(rep.total == 8);  // needs both q1 and q2
}

TEST_CASE("quickest_to_target") {
    // single target collapses to quickest-to-ultimate
    for (int i = 0; i < 15; ++i) {
        Instance inst = fuzz_instance(212, i);
        std::int64_t r = ultimate_flow(inst.net) - initial_flow(inst.net);
        if (r == 0) continue;
        auto qtt = quickest_to_target(inst.net, inst.horizon, {r});
        auto qtu = quickest_to_ultimate(inst.net, inst.horizon);
        CHECK(qtt.schedule == qtu.schedule);
        CHECK(qtt.total == qtu.total);
    }

    // all-steps targets reproduce quickest_increment where batches are unique
    for (auto which : {Family::F3, Family::F5}) {
        FamilyInstance fam = gen_family(which, 4);
        std::int64_t r = ultimate_flow(fam.inst.net) - initial_flow(fam.inst.net);
        std::vector<std::int64_t> steps;
        for (std::int64_t t = 1; t <= r; ++t) steps.push_back(t);
        auto qtt = quickest_to_target(fam.inst.net, fam.inst.horizon, steps);
        auto qi = quickest_increment(fam.inst.net, fam.inst.horizon);
        CHECK(qtt.schedule == qi.schedule);
    }

    FamilyInstance f4 = gen_family(Family::F4, 10);
    Network& net = f4.inst.net;
    CHECK_THROWS_AS(quickest_to_target(net, f4.inst.horizon, {2, 2, 4}), BadTargets);
    CHECK_THROWS_AS(quickest_to_target(net, f4.inst.horizon, {1, 2}), BadTargets);

    // splitting the targets at the combination point recovers the 13k schedule
    CHECK(quickest_to_target(net, f4.inst.horizon, {1, 3, 4}).total == 130);

    // default targets follow the experimental choice [r/2, r]
    CHECK(default_targets(4) == std::vector<std::int64_t>{2, 4});
    CHECK(default_targets(1) == std::vector<std::int64_t>{1});
    CHECK(default_targets(0).empty());
}

TEST_CASE("trace identity reproduces totals exactly") {
    for (int i = 0; i < 25; ++i) {
        Instance inst = fuzz_instance(313, i);
        std::int64_t f = initial_flow(inst.net);
        std::int64_t F = ultimate_flow(inst.net);
        std::int64_t r = F - f;
        for (auto rep : {quickest_increment(inst.net, inst.horizon),
                         quickest_to_ultimate(inst.net, inst.horizon)}) {
            std::int64_t weighted = 0;
            for (std::int64_t v : rep.period_flows)
                if (v < F) weighted += r - (v - f);
            CHECK(rep.total == inst.horizon * F - weighted);
        }
    }
}

TEST_CASE("heuristics never beat the exact optimum") {
    for (int i = 0; i < 25; ++i) {
        Instance inst = fuzz_instance(414, i, {8, {1, 3}, true});
        std::int64_t opt = exact_subset_dp(inst.net, inst.horizon).optimum;
        CHECK(quickest_increment(inst.net, inst.horizon).total <= opt);
        CHECK(quickest_to_ultimate(inst.net, inst.horizon).total <= opt);
        CHECK(quickest_to_target(inst.net, inst.horizon).total <= opt);
        CHECK(quickest_increment_poly(inst.net, inst.horizon).total <= opt);
    }
}
