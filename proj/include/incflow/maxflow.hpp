#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "incflow/network.hpp"

namespace incflow {

// Dinic blocking-flow max flow over the subgraph induced by a usable-arc mask.
// Integral capacities give an integral maximum flow.
class MaxFlowSolver {
public:
    explicit MaxFlowSolver(const Network& net) : net_(net) {}

    FlowResult solve(const std::vector<char>& usable) {
        build(usable);
        std::int64_t total = 0;
        while (bfs_levels()) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (std::int64_t pushed = dfs(net_.source, kInf)) total += pushed;
        }
        FlowResult res;
        res.value = total;
        res.flow.assign(net_.arcs.size(), 0);
        for (const Arc& a : net_.arcs) {
            if (!last_usable_[a.id]) continue;
            // flow on arc = capacity of its reverse residual edge
            res.flow[a.id] = edges_[arc_edge_[a.id] ^ 1].cap;
        }
        return res;
    }

private:
    static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

    struct Edge {
        int to;
        std::int64_t cap;
    };

    const Network& net_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_, iter_, arc_edge_;
    std::vector<char> last_usable_;

    void build(const std::vector<char>& usable) {
        last_usable_ = usable;
        edges_.clear();
        adj_.assign(net_.node_count, {});
        arc_edge_.assign(net_.arcs.size(), -1);
        level_.assign(net_.node_count, -1);
        iter_.assign(net_.node_count, 0);
        for (const Arc& a : net_.arcs) {
            if (!usable[a.id]) continue;
            arc_edge_[a.id] = static_cast<int>(edges_.size());
            adj_[a.tail].push_back(static_cast<int>(edges_.size()));
            edges_.push_back({a.head, a.capacity});
            adj_[a.head].push_back(static_cast<int>(edges_.size()));
            edges_.push_back({a.tail, 0});
        }
    }

    bool bfs_levels() {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[net_.source] = 0;
        q.push(net_.source);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : adj_[v]) {
                if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                    level_[edges_[e].to] = level_[v] + 1;
                    q.push(edges_[e].to);
                }
            }
        }
        return level_[net_.sink] >= 0;
    }

    std::int64_t dfs(int v, std::int64_t limit) {
        if (v == net_.sink) return limit;
        for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
            int e = adj_[v][i];
            int to = edges_[e].to;
            if (edges_[e].cap <= 0 || level_[to] != level_[v] + 1) continue;
            std::int64_t d = dfs(to, std::min(limit, edges_[e].cap));
            if (d > 0) {
                edges_[e].cap -= d;
                edges_[e ^ 1].cap += d;
                return d;
            }
        }
        return 0;
    }
};

inline FlowResult max_flow(const Network& net, const std::vector<char>& usable) {
    return MaxFlowSolver(net).solve(usable);
}

inline FlowResult max_flow_built(const Network& net, const std::vector<int>& built) {
    return max_flow(net, usable_mask(net, built));
}

inline std::int64_t max_flow_value(const Network& net, const std::vector<char>& usable) {
    return max_flow(net, usable).value;
}

// f: maximum flow on existing arcs only.
inline std::int64_t initial_flow(const Network& net) {
    return max_flow(net, usable_mask(net, {})).value;
}

// F: maximum flow on the complete arc set.
inline std::int64_t ultimate_flow(const Network& net) {
    return max_flow(net, full_mask(net)).value;
}

}  // namespace incflow
