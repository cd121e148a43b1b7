#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "incflow/labels.hpp"
#include "incflow/maxflow.hpp"
#include "incflow/network.hpp"
#include "incflow/subprob.hpp"

namespace incflow {

using BuildSchedule = std::vector<int>;  // distinct potential arc ids, build order

struct BadTargets : std::runtime_error {
    BadTargets() : std::runtime_error("targets must be strictly increasing and end at r") {}
};

struct SolveReport {
    std::string method;
    BuildSchedule schedule;
    std::vector<std::int64_t> period_flows;           // length T
    std::int64_t total = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> trace;  // (flow level, period count)
    double elapsed_seconds = 0.0;
};

inline void validate_schedule(const Network& net, const BuildSchedule& s) {
    std::vector<char> seen(net.arcs.size(), 0);
    for (int id : s) {
        if (id < 0 || id >= net.arc_count()) throw std::invalid_argument("schedule references unknown arc");
        if (net.arcs[id].kind != ArcKind::Potential)
            throw std::invalid_argument("schedule contains a non-potential arc");
        if (seen[id]++) throw std::invalid_argument("schedule contains a duplicate arc");
    }
}

// Period k uses the first min(k-1, m) scheduled arcs; period 1 is A_e only.
// No horizon guard: adversarial family instances legitimately carry T <= |A_p|.
inline std::vector<std::int64_t> period_flows_unchecked(const Network& net, std::int64_t T,
                                                        const BuildSchedule& s) {
    validate_schedule(net, s);
    std::int64_t m = static_cast<std::int64_t>(s.size());
    std::int64_t max_prefix = std::min(m, std::max<std::int64_t>(T - 1, 0));
    std::vector<std::int64_t> prefix_flow(static_cast<std::size_t>(max_prefix) + 1);
    std::vector<char> mask = usable_mask(net, {});
    prefix_flow[0] = max_flow(net, mask).value;
    for (std::int64_t i = 1; i <= max_prefix; ++i) {
        mask[s[static_cast<std::size_t>(i - 1)]] = 1;
        prefix_flow[static_cast<std::size_t>(i)] = max_flow(net, mask).value;
    }
    std::vector<std::int64_t> flows(static_cast<std::size_t>(T));
    for (std::int64_t k = 1; k <= T; ++k)
        flows[static_cast<std::size_t>(k - 1)] = prefix_flow[static_cast<std::size_t>(std::min(k - 1, max_prefix))];
    return flows;
}

inline SolveReport make_report(const Network& net, std::int64_t T, std::string method, BuildSchedule s,
                               double elapsed = 0.0) {
    SolveReport rep;
    rep.method = std::move(method);
    rep.schedule = std::move(s);
    rep.period_flows = period_flows_unchecked(net, T, rep.schedule);
    rep.total = 0;
    for (std::int64_t v : rep.period_flows) rep.total += v;
    for (std::int64_t v : rep.period_flows) {
        if (!rep.trace.empty() && rep.trace.back().first == v)
            rep.trace.back().second += 1;
        else
            rep.trace.push_back({v, 1});
    }
    rep.elapsed_seconds = elapsed;
    return rep;
}

// Objective semantics of the incremental maximum flow problem.
inline SolveReport evaluate_schedule(const Network& net, std::int64_t T, const BuildSchedule& s) {
    std::int64_t ap = static_cast<std::int64_t>(net.potential_ids().size());
    if (T <= ap)
        throw HorizonTooShort("horizon " + std::to_string(T) + " must exceed |A_p| = " + std::to_string(ap));
    return make_report(net, T, "evaluate", s);
}

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// Algorithm "Quickest-increment" restricted to `allowed`: repeatedly solve
// MinArcs(B, k+1) and MaxVal(B, z*), appending each batch in ascending id order.
inline SolveReport quickest_increment_allowed(const Network& net, std::int64_t T,
                                              const std::vector<char>& allowed_mask,
                                              std::string method = "quickest-increment") {
    detail::Stopwatch sw;
    std::vector<char> reachable = usable_mask(net, {});
    for (const Arc& a : net.arcs)
        if (a.kind == ArcKind::Potential && allowed_mask[a.id]) reachable[a.id] = 1;
    std::int64_t flow_cap = max_flow(net, reachable).value;

    std::vector<int> built;
    BuildSchedule schedule;
    std::int64_t current = initial_flow(net);
    while (current < flow_cap) {
        auto ma = min_arcs_allowed(net, built, current + 1, allowed_mask);
        if (!ma) throw std::logic_error("quickest_increment: increment below the reachable flow is infeasible");
        auto mv = max_val_allowed(net, built, ma->z_star, allowed_mask);
        for (int id : mv.chosen) {
            built.push_back(id);
            schedule.push_back(id);
        }
        std::sort(built.begin(), built.end());
        current = max_flow_built(net, built).value;
    }
    return make_report(net, T, std::move(method), std::move(schedule), sw.seconds());
}

inline SolveReport quickest_increment(const Network& net, std::int64_t T) {
    return quickest_increment_allowed(net, T, full_mask(net));
}

// Polynomial variant of Quickest-increment: follow the labeled augmenting path
// (fewest new arcs, then largest augmentation), build its new arcs, augment.
inline SolveReport quickest_increment_poly(const Network& net, std::int64_t T) {
    detail::Stopwatch sw;
    std::vector<int> built;
    BuildSchedule schedule;
    FlowResult x = max_flow_built(net, {});
    while (true) {
        ResidualLabels lab = residual_labels(net, built, x);
        if (!lab.reachable(net.sink)) break;
        std::int64_t delta = lab.delta[net.sink];
        for (int arc_id : lab.path_new_arcs(net.sink)) {
            built.push_back(arc_id);
            schedule.push_back(arc_id);
        }
        std::sort(built.begin(), built.end());
        // augment along the labeled path
        int v = net.sink;
        while (lab.pred_edge[v] >= 0) {
            const auto& e = lab.edges[lab.pred_edge[v]];
            x.flow[e.arc_id] += e.forward ? delta : -delta;
            v = e.from;
        }
        x.value += delta;
    }
    return make_report(net, T, "quickest-increment-poly", std::move(schedule), sw.seconds());
}

// Algorithm "Quickest-to-ultimate": restrict Quickest-increment to a minimal
// arc set admitting the ultimate maximum flow.
inline SolveReport quickest_to_ultimate(const Network& net, std::int64_t T) {
    detail::Stopwatch sw;
    std::int64_t F = ultimate_flow(net);
    auto ma = min_arcs(net, {}, F);  // feasible: target is the ultimate flow
    std::vector<char> allowed(net.arcs.size(), 0);
    for (int id : ma->witness) allowed[id] = 1;
    SolveReport rep = quickest_increment_allowed(net, T, allowed, "quickest-to-ultimate");
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

inline std::vector<std::int64_t> default_targets(std::int64_t r) {
    if (r <= 0) return {};
    if (r == 1) return {1};
    return {r / 2, r};
}

// Algorithm "Quickest-to-target": per target r_i, extend the built set by
// MinArcs/MaxVal from the previous one, then order everything accumulated so
// far by Quickest-increment. The final report is returned.
inline SolveReport quickest_to_target(const Network& net, std::int64_t T,
                                      const std::vector<std::int64_t>& targets) {
    detail::Stopwatch sw;
    std::int64_t f = initial_flow(net);
    std::int64_t r = ultimate_flow(net) - f;
    if (r == 0) {
        if (!targets.empty()) throw BadTargets();
        SolveReport rep = make_report(net, T, "quickest-to-target", {});
        rep.elapsed_seconds = sw.seconds();
        return rep;
    }
    if (targets.empty() || targets.back() != r) throw BadTargets();
    std::int64_t prev = 0;
    for (std::int64_t t : targets) {
        if (t <= prev) throw BadTargets();
        prev = t;
    }

    std::vector<int> built;
    std::vector<char> accumulated(net.arcs.size(), 0);
    SolveReport rep;
    for (std::int64_t ri : targets) {
        std::int64_t current = max_flow_built(net, built).value;
        if (current < f + ri) {
            auto ma = min_arcs(net, built, f + ri);
            auto mv = max_val(net, built, ma->z_star);
            for (int id : mv.chosen) built.push_back(id);
            std::sort(built.begin(), built.end());
        }
        for (int id : built) accumulated[id] = 1;
        rep = quickest_increment_allowed(net, T, accumulated, "quickest-to-target");
    }
    rep.elapsed_seconds = sw.seconds();
    return rep;
}

inline SolveReport quickest_to_target(const Network& net, std::int64_t T) {
    return quickest_to_target(net, T, default_targets(ultimate_flow(net) - initial_flow(net)));
}

}  // namespace incflow
