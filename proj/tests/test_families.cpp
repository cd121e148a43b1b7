#include <doctest.h>

#include "incflow/exact.hpp"
#include "incflow/families.hpp"
#include "incflow/heur.hpp"
#include "incflow/subprob.hpp"

using namespace incflow;

TEST_CASE("family closed forms at spot values of k") {
    struct Row {
        Family which;
        std::int64_t k, qi, qtu, cert;
    };
    for (const Row& row : {Row{Family::F2, 10, 22, 14, 22}, Row{Family::F3, 10, 22, 30, 30},
                           Row{Family::F4, 10, 113, 104, 130}, Row{Family::F5, 5, 59, 73, 73}}) {
        FamilyInstance fam = gen_family(row.which, row.k);
        CHECK(quickest_increment(fam.inst.net, fam.inst.horizon).total == row.qi);
        CHECK(quickest_to_ultimate(fam.inst.net, fam.inst.horizon).total == row.qtu);
        CHECK(certified_lower_bound(fam.inst.net, fam.inst.horizon, fam.certified) == row.cert);
        CHECK(*fam.qi_total == row.qi);
        CHECK(*fam.qtu_total == row.qtu);
        CHECK(*fam.lower_bound == row.cert);
    }
}

TEST_CASE("family preconditions") {
    CHECK_THROWS_AS(gen_family(Family::F2, 1), KTooSmall);
    CHECK_THROWS_AS(gen_family(Family::F5, 1), KTooSmall);
    CHECK_NOTHROW(gen_family(Family::F1, 1));
}

TEST_CASE("family instances are valid unit-capacity networks") {
    for (auto which : {Family::F2, Family::F3, Family::F4, Family::F5}) {
        FamilyInstance fam = gen_family(which, 4);
        CHECK(validate_network(fam.inst.net).empty());
        CHECK(fam.inst.net.unit_capacities());
    }
}

TEST_CASE("F2 optimum is proven by the coinciding c-value bound") {
    for (std::int64_t k = 2; k <= 12; ++k) {
        FamilyInstance fam = gen_family(Family::F2, k);
        auto bound = upper_bound_opt(fam.inst.net, fam.inst.horizon);
        std::int64_t cert = certified_lower_bound(fam.inst.net, fam.inst.horizon, fam.certified);
        CHECK(bound.bound == cert);  // upper == lower: optimum pinned at 2k+2
        CHECK(cert == 2 * k + 2);
    }
}

TEST_CASE("small-k family optima against the exact solver") {
    // F3 k=3: |A_p| = 8; QtU is optimal
    FamilyInstance f3 = gen_family(Family::F3, 3);
    CHECK(exact_subset_dp(f3.inst.net, f3.inst.horizon).optimum == 9);

    // F5 k=2: |A_p| = 16; the ultimate-first schedule certifies 14k+3 = 31
    // while the true optimum is 32 (ultimate-first is only optimal for large k)
    FamilyInstance f5 = gen_family(Family::F5, 2);
    auto dp = exact_subset_dp(f5.inst.net, f5.inst.horizon, 16);
    CHECK(dp.optimum == 32);
    CHECK(certified_lower_bound(f5.inst.net, f5.inst.horizon, f5.certified) <= dp.optimum);

    // F2 k=2: optimum equals 2k+2 despite T <= |A_p|
    FamilyInstance f2 = gen_family(Family::F2, 2);
    CHECK(exact_subset_dp(f2.inst.net, f2.inst.horizon).optimum == 6);
}

TEST_CASE("matching counterexamples") {
    FamilyInstance m1 = gen_matching(MatchingFamily::M1);
    CHECK(initial_flow(m1.inst.net) == 6);
    CHECK(ultimate_flow(m1.inst.net) == 8);
    CHECK(quickest_to_ultimate(m1.inst.net, m1.inst.horizon).total == 68);
    CHECK(certified_lower_bound(m1.inst.net, m1.inst.horizon, m1.certified) == 69);

    FamilyInstance m2 = gen_matching(MatchingFamily::M2);
    CHECK(initial_flow(m2.inst.net) == 5);
    CHECK(ultimate_flow(m2.inst.net) == 7);
    CHECK(quickest_increment(m2.inst.net, m2.inst.horizon).total == 53);
    CHECK(certified_lower_bound(m2.inst.net, m2.inst.horizon, m2.certified) == 54);

    // flows correspond to matchings: gates and middles all unit
    for (const FamilyInstance* fam : {&m1, &m2})
        for (const Arc& a : fam->inst.net.arcs) CHECK(a.capacity == 1);
}
