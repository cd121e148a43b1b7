#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "incflow/heur.hpp"
#include "incflow/maxflow.hpp"
#include "incflow/network.hpp"

namespace incflow {

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct ExactResult {
    std::int64_t optimum = 0;
    BuildSchedule schedule;
    std::int64_t explored = 0;
};

namespace detail {

// Max-flow values for every subset of the potential arcs, indexed by bitmask.
struct SubsetFlowTable {
    std::vector<int> pot;
    std::vector<std::int64_t> flow;

    SubsetFlowTable(const Network& net, int cap, const char* who) {
        pot = net.potential_ids();
        int m = static_cast<int>(pot.size());
        if (m > cap)
            throw TooLarge(std::string(who) + ": |A_p| = " + std::to_string(m) + " exceeds cap " +
                           std::to_string(cap));
        flow.resize(1ull << m);
        std::vector<char> base = usable_mask(net, {});
        MaxFlowSolver solver(net);
        for (std::uint64_t mask = 0; mask < flow.size(); ++mask) {
            std::vector<char> usable = base;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) usable[pot[static_cast<std::size_t>(i)]] = 1;
            flow[mask] = solver.solve(usable).value;
        }
    }
};

}  // namespace detail

// Subset DP: value(S) = best cumulative flow over the first |S| periods when S
// is built one arc per period; order inside S is recovered from the argmax
// chain. Builds happen every period until A_p (or the horizon) is exhausted,
// which is optimal because adding an arc never lowers the max flow.
inline ExactResult exact_subset_dp(const Network& net, std::int64_t T, int cap = 22) {
    detail::SubsetFlowTable table(net, cap, "exact_subset_dp");
    const int m = static_cast<int>(table.pot.size());
    const std::uint64_t full = (1ull << m) - 1;
    std::vector<std::int64_t> value(1ull << m, 0);
    std::vector<int> choice(1ull << m, -1);
    ExactResult res;

    for (std::uint64_t mask = 1; mask <= full && m > 0; ++mask) {
        std::int64_t best = -1;
        int arg = -1;
        for (int i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            std::uint64_t prev = mask & ~(1ull << i);
            std::int64_t cand = value[prev] + table.flow[prev];
            if (cand > best) {
                best = cand;
                arg = i;
            }
            ++res.explored;
        }
        value[mask] = best;
        choice[mask] = arg;
    }

    std::uint64_t best_mask = full;
    if (T - 1 >= m) {
        res.optimum = value[full] + (T - m) * table.flow[full];
    } else {
        // Horizon too short to build everything: best subset of size T-1.
        std::int64_t best = -1;
        for (std::uint64_t mask = 0; mask <= full; ++mask) {
            if (std::popcount(mask) != static_cast<int>(T - 1)) continue;
            std::int64_t cand = value[mask] + table.flow[mask];
            if (cand > best) {
                best = cand;
                best_mask = mask;
            }
        }
        res.optimum = best;
    }

    std::vector<int> order;
    for (std::uint64_t mask = best_mask; mask != 0;) {
        int i = choice[mask];
        order.push_back(table.pot[static_cast<std::size_t>(i)]);
        mask &= ~(1ull << i);
    }
    std::reverse(order.begin(), order.end());
    res.schedule = std::move(order);
    return res;
}

// Oracle for the oracle: every build order, evaluated through the flow table.
inline ExactResult brute_force_permutations(const Network& net, std::int64_t T, int cap = 8) {
    detail::SubsetFlowTable table(net, cap, "brute_force_permutations");
    const int m = static_cast<int>(table.pot.size());
    ExactResult res;
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    res.optimum = -1;
    do {
        std::int64_t total = 0;
        std::uint64_t mask = 0;
        std::int64_t limit = std::min<std::int64_t>(m, T - 1);
        for (std::int64_t i = 0; i < limit; ++i) {
            total += table.flow[mask];
            mask |= 1ull << perm[static_cast<std::size_t>(i)];
        }
        total += (T - limit) * table.flow[mask];
        ++res.explored;
        if (total > res.optimum) {
            res.optimum = total;
            res.schedule.clear();
            for (int i : perm) res.schedule.push_back(table.pot[static_cast<std::size_t>(i)]);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (m == 0) {
        res.optimum = T * table.flow[0];
        res.explored = 1;
    }
    return res;
}

// Any feasible schedule's value lower-bounds the optimum.
inline std::int64_t certified_lower_bound(const Network& net, std::int64_t T, const BuildSchedule& s) {
    return make_report(net, T, "certified", s).total;
}

}  // namespace incflow
