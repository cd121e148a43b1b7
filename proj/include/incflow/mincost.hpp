#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "incflow/network.hpp"

namespace incflow {

struct UnitMinCostResult {
    std::int64_t cost = 0;           // number of newly used potential arcs
    FlowResult flow;                 // flow of value exactly `target`
    std::vector<int> used_new;       // potential arcs outside `built` carrying flow, ascending
};

// Minimum cost flow of value `target` on a unit-capacity network. Arcs in
// A_e or `built_mask` cost 0, potential arcs allowed by `allowed_mask` cost 1,
// all other potential arcs are unusable. Successive shortest augmenting paths;
// returns nullopt when `target` exceeds the max flow of the usable subgraph.
inline std::optional<UnitMinCostResult> min_cost_flow_unit_masked(const Network& net,
                                                                  const std::vector<char>& built_mask,
                                                                  const std::vector<char>& allowed_mask,
                                                                  std::int64_t target) {
    for (const Arc& a : net.arcs)
        if (a.capacity != 1) throw UnitCapacityRequired();

    struct Edge {
        int to;
        int cap;
        int cost;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj(net.node_count);
    std::vector<int> arc_edge(net.arcs.size(), -1);

    for (const Arc& a : net.arcs) {
        int cost;
        if (a.kind == ArcKind::Existing || built_mask[a.id])
            cost = 0;
        else if (allowed_mask[a.id])
            cost = 1;
        else
            continue;
        arc_edge[a.id] = static_cast<int>(edges.size());
        adj[a.tail].push_back(static_cast<int>(edges.size()));
        edges.push_back({a.head, 1, cost});
        adj[a.head].push_back(static_cast<int>(edges.size()));
        edges.push_back({a.tail, 0, -cost});
    }

    const int n = net.node_count;
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::int64_t total_cost = 0;

    for (std::int64_t sent = 0; sent < target; ++sent) {
        // Bellman-Ford (SPFA); residual costs can be -1 but no negative cycles.
        std::vector<std::int64_t> dist(n, inf);
        std::vector<int> pred(n, -1);
        std::vector<char> inq(n, 0);
        std::deque<int> q;
        dist[net.source] = 0;
        q.push_back(net.source);
        inq[net.source] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            inq[v] = 0;
            for (int e : adj[v]) {
                if (edges[e].cap <= 0) continue;
                int to = edges[e].to;
                std::int64_t nd = dist[v] + edges[e].cost;
                if (nd < dist[to]) {
                    dist[to] = nd;
                    pred[to] = e;
                    if (!inq[to]) {
                        inq[to] = 1;
                        q.push_back(to);
                    }
                }
            }
        }
        if (dist[net.sink] >= inf) return std::nullopt;
        total_cost += dist[net.sink];
        for (int v = net.sink; v != net.source;) {
            int e = pred[v];
            edges[e].cap -= 1;
            edges[e ^ 1].cap += 1;
            v = edges[e ^ 1].to;
        }
    }

    UnitMinCostResult res;
    res.cost = total_cost;
    res.flow.value = target;
    res.flow.flow.assign(net.arcs.size(), 0);
    for (const Arc& a : net.arcs) {
        if (arc_edge[a.id] < 0) continue;
        std::int64_t f = edges[arc_edge[a.id] ^ 1].cap;
        res.flow.flow[a.id] = f;
        if (f > 0 && a.kind == ArcKind::Potential && !built_mask[a.id]) res.used_new.push_back(a.id);
    }
    return res;
}

inline std::optional<UnitMinCostResult> min_cost_flow_unit(const Network& net, const std::vector<int>& built,
                                                           std::int64_t target) {
    std::vector<char> built_mask(net.arcs.size(), 0);
    for (int id : built) built_mask.at(id) = 1;
    return min_cost_flow_unit_masked(net, built_mask, full_mask(net), target);
}

}  // namespace incflow
