#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "incflow/labels.hpp"
#include "incflow/maxflow.hpp"
#include "incflow/mincost.hpp"
#include "incflow/network.hpp"

namespace incflow {

struct InvalidBudget : std::runtime_error {
    InvalidBudget() : std::runtime_error("no arc set of the requested size is feasible") {}
};

struct MinArcsResult {
    std::int64_t z_star = 0;
    std::vector<int> witness;  // ascending arc ids, |witness| == z_star
    FlowResult flow;           // max flow on A_e u built u witness
};

struct MaxValResult {
    std::int64_t xi = 0;
    std::vector<int> chosen;  // ascending, exactly z_star arcs
};

namespace detail {

inline std::vector<char> ids_to_mask(const Network& net, const std::vector<int>& ids) {
    std::vector<char> m(net.arcs.size(), 0);
    for (int id : ids) m.at(id) = 1;
    return m;
}

// Candidate potential arcs: allowed, not built, ascending.
inline std::vector<int> candidate_arcs(const Network& net, const std::vector<char>& built_mask,
                                       const std::vector<char>& allowed_mask) {
    std::vector<int> cands;
    for (const Arc& a : net.arcs)
        if (a.kind == ArcKind::Potential && !built_mask[a.id] && allowed_mask[a.id]) cands.push_back(a.id);
    return cands;
}

// Unit-capacity feasibility oracle: can flow reach `target` using at most
// `budget` candidate arcs from `pool_mask` (treating `base_mask` as built)?
inline bool unit_reachable_within(const Network& net, const std::vector<char>& base_mask,
                                  const std::vector<char>& pool_mask, std::int64_t target,
                                  std::int64_t budget) {
    auto r = min_cost_flow_unit_masked(net, base_mask, pool_mask, target);
    return r && r->cost <= budget;
}

// Lexicographically smallest set of exactly `size` arcs from `cands` such that
// base u set reaches flow `target`. Caller guarantees one exists.
inline std::vector<int> unit_lex_min_set(const Network& net, std::vector<char> base_mask,
                                         const std::vector<int>& cands, std::int64_t target,
                                         std::int64_t size) {
    std::vector<int> chosen;
    std::int64_t left = size;
    for (std::size_t i = 0; i < cands.size() && left > 0; ++i) {
        std::int64_t pool_after = static_cast<std::int64_t>(cands.size() - i - 1);
        // Try including cands[i]: a completion must exist among later candidates.
        std::vector<char> base_try = base_mask;
        base_try[cands[i]] = 1;
        std::vector<char> pool(net.arcs.size(), 0);
        for (std::size_t j = i + 1; j < cands.size(); ++j) pool[cands[j]] = 1;
        if (pool_after >= left - 1 && unit_reachable_within(net, base_try, pool, target, left - 1)) {
            chosen.push_back(cands[i]);
            base_mask = std::move(base_try);
            --left;
        }
    }
    return chosen;
}

struct SubsetSearch {
    const Network& net;
    const std::vector<int>& cands;
    std::vector<char> base_mask;
    std::unordered_map<std::uint64_t, std::int64_t> flow_cache;

    std::int64_t flow_of(std::uint64_t chosen_bits) {
        auto it = flow_cache.find(chosen_bits);
        if (it != flow_cache.end()) return it->second;
        std::vector<char> m = base_mask;
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (chosen_bits >> i & 1) m[cands[i]] = 1;
        std::int64_t v = max_flow(net, m).value;
        flow_cache.emplace(chosen_bits, v);
        return v;
    }

    std::uint64_t all_from(std::size_t idx) const {
        std::uint64_t bits = 0;
        for (std::size_t i = idx; i < cands.size(); ++i) bits |= 1ull << i;
        return bits;
    }

    // First (lex order) subset of exactly `size` reaching `target`, or nullopt.
    std::optional<std::uint64_t> find_exact(std::size_t size, std::int64_t target) {
        std::uint64_t out = 0;
        if (rec_exact(0, size, target, 0, out)) return out;
        return std::nullopt;
    }

    bool rec_exact(std::size_t idx, std::size_t left, std::int64_t target, std::uint64_t chosen,
                   std::uint64_t& out) {
        if (left == 0) {
            if (flow_of(chosen) >= target) {
                out = chosen;
                return true;
            }
            return false;
        }
        if (cands.size() - idx < left) return false;
        if (flow_of(chosen | all_from(idx)) < target) return false;
        if (rec_exact(idx + 1, left - 1, target, chosen | (1ull << idx), out)) return true;
        return rec_exact(idx + 1, left, target, chosen, out);
    }

    // Max flow over subsets of exactly `size`; lex-first among maximizers.
    void rec_best(std::size_t idx, std::size_t left, std::uint64_t chosen, std::int64_t& best,
                  std::uint64_t& best_set, bool& have) {
        if (left == 0) {
            std::int64_t v = flow_of(chosen);
            if (!have || v > best) {
                best = v;
                best_set = chosen;
                have = true;
            }
            return;
        }
        if (cands.size() - idx < left) return;
        if (have && flow_of(chosen | all_from(idx)) <= best) return;
        rec_best(idx + 1, left - 1, chosen | (1ull << idx), best, best_set, have);
        rec_best(idx + 1, left, chosen, best, best_set, have);
    }
};

inline std::vector<int> bits_to_ids(std::uint64_t bits, const std::vector<int>& cands) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (bits >> i & 1) ids.push_back(cands[i]);
    return ids;
}

}  // namespace detail

// MinArcs(B, target): fewest new potential arcs (within `allowed`) whose
// addition lets the max flow reach `target_value`. Witness is the
// lexicographically smallest optimal set. nullopt when infeasible.
inline std::optional<MinArcsResult> min_arcs_allowed(const Network& net, const std::vector<int>& built,
                                                     std::int64_t target_value,
                                                     const std::vector<char>& allowed_mask) {
    std::vector<char> built_mask = detail::ids_to_mask(net, built);
    std::vector<char> base_usable = usable_mask(net, built);
    std::vector<int> cands = detail::candidate_arcs(net, built_mask, allowed_mask);

    FlowResult base = max_flow(net, base_usable);
    if (base.value >= target_value) {
        MinArcsResult r;
        r.z_star = 0;
        r.flow = std::move(base);
        return r;
    }

    std::vector<char> with_all = base_usable;
    for (int id : cands) with_all[id] = 1;
    if (max_flow(net, with_all).value < target_value) return std::nullopt;

    auto finish = [&](std::vector<int> witness) {
        MinArcsResult r;
        r.z_star = static_cast<std::int64_t>(witness.size());
        r.witness = std::move(witness);
        std::vector<char> m = base_usable;
        for (int id : r.witness) m[id] = 1;
        r.flow = max_flow(net, m);
        return r;
    };

    if (net.unit_capacities()) {
        std::vector<char> pool(net.arcs.size(), 0);
        for (int id : cands) pool[id] = 1;
        auto mc = min_cost_flow_unit_masked(net, built_mask, pool, target_value);
        // feasibility established above
        std::int64_t z = mc->cost;
        return finish(detail::unit_lex_min_set(net, built_mask, cands, target_value, z));
    }

    if (cands.size() > 63)
        throw std::runtime_error("min_arcs: general-capacity search supports at most 63 candidate arcs");
    detail::SubsetSearch search{net, cands, base_usable, {}};
    // d(t) lower-bounds the count of new arcs needed for any increase.
    std::int64_t lb = 1;
    ResidualLabels lab = residual_labels(net, built, base);
    // labels see all unbuilt potential arcs; restrict: only valid when allowed == all
    bool allowed_all = true;
    for (const Arc& a : net.arcs)
        if (a.kind == ArcKind::Potential && !built_mask[a.id] && !allowed_mask[a.id]) allowed_all = false;
    if (allowed_all && lab.reachable(net.sink)) lb = std::max<std::int64_t>(lb, lab.d[net.sink]);

    for (std::int64_t z = lb; z <= static_cast<std::int64_t>(cands.size()); ++z) {
        if (auto bits = search.find_exact(static_cast<std::size_t>(z), target_value))
            return finish(detail::bits_to_ids(*bits, cands));
    }
    return std::nullopt;  // unreachable; guarded above
}

inline std::optional<MinArcsResult> min_arcs(const Network& net, const std::vector<int>& built,
                                             std::int64_t target_value) {
    return min_arcs_allowed(net, built, target_value, full_mask(net));
}

// MaxVal(B, z*): among sets of exactly z_star new arcs, maximize the resulting
// max flow; ties resolved to the lexicographically smallest arc-id set.
inline MaxValResult max_val_allowed(const Network& net, const std::vector<int>& built, std::int64_t z_star,
                                    const std::vector<char>& allowed_mask) {
    std::vector<char> built_mask = detail::ids_to_mask(net, built);
    std::vector<char> base_usable = usable_mask(net, built);
    std::vector<int> cands = detail::candidate_arcs(net, built_mask, allowed_mask);
    if (z_star < 0 || z_star > static_cast<std::int64_t>(cands.size())) throw InvalidBudget();

    MaxValResult res;
    if (z_star == 0) {
        res.xi = max_flow(net, base_usable).value;
        return res;
    }

    if (net.unit_capacities()) {
        // Successive cheapest augmentations: xi = largest value whose min cost
        // fits the budget. Supersets never hurt, so "exactly" == "at most".
        std::vector<char> pool(net.arcs.size(), 0);
        for (int id : cands) pool[id] = 1;
        std::int64_t xi = 0;
        for (std::int64_t v = 1;; ++v) {
            auto mc = min_cost_flow_unit_masked(net, built_mask, pool, v);
            if (!mc || mc->cost > z_star) break;
            xi = v;
        }
        res.xi = xi;
        res.chosen = detail::unit_lex_min_set(net, built_mask, cands, xi, z_star);
        return res;
    }

    if (cands.size() > 63)
        throw std::runtime_error("max_val: general-capacity search supports at most 63 candidate arcs");
    detail::SubsetSearch search{net, cands, base_usable, {}};
    std::int64_t best = 0;
    std::uint64_t best_set = 0;
    bool have = false;
    search.rec_best(0, static_cast<std::size_t>(z_star), 0, best, best_set, have);
    res.xi = best;
    res.chosen = detail::bits_to_ids(best_set, cands);
    return res;
}

inline MaxValResult max_val(const Network& net, const std::vector<int>& built, std::int64_t z_star) {
    return max_val_allowed(net, built, z_star, full_mask(net));
}

// c_j of Eq. (1): minimum number of potential arcs needed to reach flow f+j,
// for j = 0..r. Unit capacities only.
struct CValues {
    std::int64_t f = 0;
    std::int64_t F = 0;
    std::vector<std::int64_t> c;  // length r+1, c[0] == 0

    std::int64_t r() const { return static_cast<std::int64_t>(c.size()) - 1; }
    std::int64_t sum_1_to_r() const {
        std::int64_t s = 0;
        for (std::size_t j = 1; j < c.size(); ++j) s += c[j];
        return s;
    }
};

inline CValues c_values(const Network& net) {
    if (!net.unit_capacities()) throw UnitCapacityRequired();
    CValues cv;
    cv.f = initial_flow(net);
    cv.F = ultimate_flow(net);
    cv.c.assign(static_cast<std::size_t>(cv.F - cv.f) + 1, 0);
    for (std::int64_t j = 1; j <= cv.F - cv.f; ++j) {
        auto mc = min_cost_flow_unit(net, {}, cv.f + j);
        cv.c[static_cast<std::size_t>(j)] = mc->cost;  // j <= r, always feasible
    }
    return cv;
}

struct OptimumBound {
    std::int64_t bound = 0;       // TF - sum c_j
    std::int64_t weak_bound = 0;  // TF - r(r-1)/2 - c_r
};

inline OptimumBound upper_bound_opt(const Network& net, std::int64_t T) {
    CValues cv = c_values(net);
    std::int64_t r = cv.r();
    OptimumBound b;
    b.bound = T * cv.F - cv.sum_1_to_r();
    b.weak_bound = T * cv.F - r * (r - 1) / 2 - cv.c.back();
    return b;
}

}  // namespace incflow
