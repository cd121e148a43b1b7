#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "incflow/exact.hpp"
#include "incflow/heur.hpp"
#include "incflow/network.hpp"
#include "incflow/subprob.hpp"

namespace incflow {

struct NotMatchingStructure : std::runtime_error {
    explicit NotMatchingStructure(const std::string& what) : std::runtime_error(what) {}
};

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RatioRecord {
    std::string instance_id;
    std::int64_t z_star = 0;  // exact optimum
    std::int64_t z1 = 0;      // Quickest-to-ultimate
    std::int64_t z2 = 0;      // Quickest-increment
    std::int64_t r = 0;
    std::int64_t f = 0;
    std::int64_t F = 0;
    std::int64_t T = 0;
    CValues c;
    std::vector<Verdict> verdicts;

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }
};

namespace detail {

// Periods spent at flow level f+i, for i = 0..r-1.
inline std::vector<std::int64_t> level_counts(const SolveReport& rep, std::int64_t f, std::int64_t r) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(r), 0);
    for (std::int64_t v : rep.period_flows) {
        std::int64_t i = v - f;
        if (i >= 0 && i < r) ++counts[static_cast<std::size_t>(i)];
    }
    return counts;
}

inline void check(RatioRecord& rec, const std::string& name, bool pass, const std::string& detail) {
    rec.verdicts.push_back({name, pass, detail});
}

inline bool nondecreasing(const std::vector<std::int64_t>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[i - 1]) return false;
    return true;
}

}  // namespace detail

// Full bound suite for a unit-capacity instance small enough for the exact
// solver: the c-value upper bound on the optimum, the trace identities
// recovering each total, trace monotonicity, the increment/c-value ratio
// bound mu_i <= c_j/(j-i), the 2-approximation with
// its sharpened form, and the 3/2-approximation.
inline RatioRecord check_instance(const Network& net, std::int64_t T, const std::string& instance_id,
                                  int exact_cap = 22) {
    RatioRecord rec;
    rec.instance_id = instance_id;
    rec.c = c_values(net);  // throws UnitCapacityRequired on general capacities
    rec.f = rec.c.f;
    rec.F = rec.c.F;
    rec.r = rec.c.r();
    rec.T = T;

    rec.z_star = exact_subset_dp(net, T, exact_cap).optimum;
    SolveReport qtu = quickest_to_ultimate(net, T);
    SolveReport qi = quickest_increment(net, T);
    rec.z1 = qtu.total;
    rec.z2 = qi.total;
    auto lambda = detail::level_counts(qtu, rec.f, rec.r);
    auto mu = detail::level_counts(qi, rec.f, rec.r);

    const std::int64_t TF = T * rec.F;
    detail::check(rec, "c_value_bound", rec.z_star <= TF - rec.c.sum_1_to_r(),
                  "z*=" + std::to_string(rec.z_star) + " bound=" + std::to_string(TF - rec.c.sum_1_to_r()));

    std::int64_t lam_sum = 0, mu_sum = 0;
    for (std::int64_t i = 0; i < rec.r; ++i) {
        lam_sum += lambda[static_cast<std::size_t>(i)] * (rec.r - i);
        mu_sum += mu[static_cast<std::size_t>(i)] * (rec.r - i);
    }
    detail::check(rec, "trace_identity_z1", rec.z1 == TF - lam_sum,
                  "z1=" + std::to_string(rec.z1) + " TF-sum=" + std::to_string(TF - lam_sum));
    detail::check(rec, "trace_identity_z2", rec.z2 == TF - mu_sum,
                  "z2=" + std::to_string(rec.z2) + " TF-sum=" + std::to_string(TF - mu_sum));
    detail::check(rec, "trace_monotone", detail::nondecreasing(lambda) && detail::nondecreasing(mu),
                  "lambda and mu nondecreasing");

    bool ratio_ok = true;
    for (std::int64_t i = 0; i < rec.r && ratio_ok; ++i)
        for (std::int64_t j = i + 1; j <= rec.r; ++j)
            if (mu[static_cast<std::size_t>(i)] * (j - i) > rec.c.c[static_cast<std::size_t>(j)]) {
                ratio_ok = false;
                break;
            }
    detail::check(rec, "increment_ratio_bound", ratio_ok, "mu_i (j-i) <= c_j for all i<j");

    detail::check(rec, "approx2", rec.z_star <= 2 * rec.z1,
                  "z*=" + std::to_string(rec.z_star) + " 2z1=" + std::to_string(2 * rec.z1));
    detail::check(rec, "approx2_sharp", rec.z_star <= 2 * rec.z1 - rec.r * (rec.r - 1) / 2,
                  "2z1-r(r-1)/2=" + std::to_string(2 * rec.z1 - rec.r * (rec.r - 1) / 2));
    detail::check(rec, "approx3_2", 2 * rec.z_star <= 3 * rec.z2,
                  "z*=" + std::to_string(rec.z_star) + " (3/2)z2 vs 2z*");
    return rec;
}

// Structure guard for the incremental maximum matching special case:
// existing unit gate arcs s->v and w->t, all remaining arcs between the two
// sides, all capacities 1.
inline void require_matching_structure(const Network& net) {
    if (!net.unit_capacities()) throw NotMatchingStructure("capacities must all be 1");
    std::vector<char> in_v(static_cast<std::size_t>(net.node_count), 0);
    std::vector<char> in_w(static_cast<std::size_t>(net.node_count), 0);
    for (const Arc& a : net.arcs) {
        if (a.tail == net.source) {
            if (a.kind != ArcKind::Existing) throw NotMatchingStructure("source gate arcs must be existing");
            if (a.head == net.sink) throw NotMatchingStructure("no direct source-sink arc allowed");
            in_v[static_cast<std::size_t>(a.head)] = 1;
        } else if (a.head == net.sink) {
            if (a.kind != ArcKind::Existing) throw NotMatchingStructure("sink gate arcs must be existing");
            in_w[static_cast<std::size_t>(a.tail)] = 1;
        }
    }
    for (const Arc& a : net.arcs) {
        if (a.tail == net.source || a.head == net.sink) continue;
        if (a.head == net.source || a.tail == net.sink) throw NotMatchingStructure("arc touches s/t wrong way");
        if (!in_v[static_cast<std::size_t>(a.tail)] || !in_w[static_cast<std::size_t>(a.head)])
            throw NotMatchingStructure("middle arcs must go V -> W");
        if (in_w[static_cast<std::size_t>(a.tail)] || in_v[static_cast<std::size_t>(a.head)])
            throw NotMatchingStructure("V and W must be disjoint");
    }
}

// Matching-case bounds: the 4/3 approximation of Quickest-to-ultimate, the
// strengthened z1 lower bound (both branches), and the averaging inequality
// applied to the lambda trace.
inline RatioRecord check_matching_instance(const Network& net, std::int64_t T,
                                           const std::string& instance_id, int exact_cap = 22) {
    require_matching_structure(net);
    RatioRecord rec;
    rec.instance_id = instance_id;
    rec.c = c_values(net);
    rec.f = rec.c.f;
    rec.F = rec.c.F;
    rec.r = rec.c.r();
    rec.T = T;
    rec.z_star = exact_subset_dp(net, T, exact_cap).optimum;
    SolveReport qtu = quickest_to_ultimate(net, T);
    SolveReport qi = quickest_increment(net, T);
    rec.z1 = qtu.total;
    rec.z2 = qi.total;
    auto lambda = detail::level_counts(qtu, rec.f, rec.r);

    detail::check(rec, "approx4_3", 3 * rec.z_star <= 4 * rec.z1,
                  "z*=" + std::to_string(rec.z_star) + " z1=" + std::to_string(rec.z1));

    const std::int64_t TF = T * rec.F;
    const std::int64_t cr = rec.c.c.back();
    if (rec.f >= rec.r) {
        // z1 >= TF - c_r (r+1) / 2, compared at twice the scale
        detail::check(rec, "z1_lower_bound", 2 * rec.z1 >= 2 * TF - cr * (rec.r + 1),
                      "case f>=r: 2z1=" + std::to_string(2 * rec.z1) + " rhs=" +
                          std::to_string(2 * TF - cr * (rec.r + 1)));
    } else {
        detail::check(rec, "z1_lower_bound",
                      4 * rec.z1 >= 4 * TF - (cr * rec.F + rec.r * (rec.r - rec.f) + 2 * cr),
                      "case f<r: 4z1=" + std::to_string(4 * rec.z1) + " rhs=" +
                          std::to_string(4 * TF - (cr * rec.F + rec.r * (rec.r - rec.f) + 2 * cr)));
    }

    // averaging: sum alpha_i beta_i <= (B/n) sum alpha_i with alpha = r-i desc,
    // beta = lambda asc; checked at scale n = r.
    std::int64_t lhs = 0, b_sum = 0;
    for (std::int64_t i = 0; i < rec.r; ++i) {
        lhs += lambda[static_cast<std::size_t>(i)] * (rec.r - i);
        b_sum += lambda[static_cast<std::size_t>(i)];
    }
    bool avg_ok = rec.r == 0 || rec.r * lhs <= b_sum * (rec.r * (rec.r + 1) / 2);
    detail::check(rec, "averaging", avg_ok, "r*sum(lambda_i(r-i)) <= sum(lambda)*r(r+1)/2");
    return rec;
}

}  // namespace incflow
