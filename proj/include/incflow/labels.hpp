#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <tuple>
#include <vector>

#include "incflow/network.hpp"

namespace incflow {

// Per-node residual labeling triple (d, delta, pred):
//   d     minimum number of unbuilt potential arcs on any augmenting s-v path
//   delta maximum augmentation over paths attaining d
//   pred  residual edge into v realizing (d, delta), -1 at the source
// d == kUnreachable marks unreachable nodes; delta at the source is kInfAug.
struct ResidualLabels {
    static constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();
    static constexpr std::int64_t kInfAug = std::numeric_limits<std::int64_t>::max();

    std::vector<std::int64_t> d;
    std::vector<std::int64_t> delta;
    std::vector<int> pred_edge;   // index into `edges`
    struct REdge {
        int from, to;
        std::int64_t residual;
        int arc_id;    // underlying arc
        int weight;    // 1 iff unbuilt potential arc used forward
        bool forward;
    };
    std::vector<REdge> edges;

    bool reachable(int v) const { return d[v] != kUnreachable; }

    // Arc ids along the labeled s->v path, in path order.
    std::vector<int> path_arcs(int v) const {
        std::vector<int> arcs;
        while (pred_edge[v] >= 0) {
            const REdge& e = edges[pred_edge[v]];
            arcs.push_back(e.arc_id);
            v = e.from;
        }
        std::reverse(arcs.begin(), arcs.end());
        return arcs;
    }

    // Unbuilt potential arcs on the labeled path, ascending by position.
    std::vector<int> path_new_arcs(int v) const {
        std::vector<int> arcs;
        while (pred_edge[v] >= 0) {
            const REdge& e = edges[pred_edge[v]];
            if (e.weight == 1) arcs.push_back(e.arc_id);
            v = e.from;
        }
        std::reverse(arcs.begin(), arcs.end());
        return arcs;
    }
};

// 0/1-weight shortest-path labeling on the residual graph of `base_flow`
// over A_e u built, with every unbuilt potential arc available at full
// capacity and weight 1. Nodes finalize in lexicographic (d asc, delta desc)
// order; remaining ties break toward the smaller predecessor arc id.
inline ResidualLabels residual_labels(const Network& net, const std::vector<int>& built,
                                      const FlowResult& base_flow) {
    std::vector<char> bmask(net.arcs.size(), 0);
    for (int id : built) bmask.at(id) = 1;

    ResidualLabels lab;
    std::vector<std::vector<int>> out(net.node_count);
    auto add_edge = [&](int from, int to, std::int64_t residual, int arc_id, int weight, bool fwd) {
        if (residual <= 0) return;
        out[from].push_back(static_cast<int>(lab.edges.size()));
        lab.edges.push_back({from, to, residual, arc_id, weight, fwd});
    };
    for (const Arc& a : net.arcs) {
        if (a.kind == ArcKind::Existing || bmask[a.id]) {
            std::int64_t f = a.id < static_cast<int>(base_flow.flow.size()) ? base_flow.flow[a.id] : 0;
            add_edge(a.tail, a.head, a.capacity - f, a.id, 0, true);
            add_edge(a.head, a.tail, f, a.id, 0, false);
        } else {
            add_edge(a.tail, a.head, a.capacity, a.id, 1, true);
        }
    }

    const int n = net.node_count;
    lab.d.assign(n, ResidualLabels::kUnreachable);
    lab.delta.assign(n, 0);
    lab.pred_edge.assign(n, -1);
    lab.d[net.source] = 0;
    lab.delta[net.source] = ResidualLabels::kInfAug;

    // (d, -delta, pred arc id, node): pop order is the finalization order.
    using State = std::tuple<std::int64_t, std::int64_t, int, int>;
    std::priority_queue<State, std::vector<State>, std::greater<State>> pq;
    pq.push({0, -lab.delta[net.source], -1, net.source});
    std::vector<char> done(n, 0);

    while (!pq.empty()) {
        auto [dv, negdelta, tie, v] = pq.top();
        pq.pop();
        if (done[v] || dv != lab.d[v] || -negdelta != lab.delta[v]) continue;
        done[v] = 1;
        for (int ei : out[v]) {
            const auto& e = lab.edges[ei];
            if (done[e.to]) continue;
            std::int64_t nd = dv + e.weight;
            std::int64_t ndelta = std::min(lab.delta[v], e.residual);
            bool better = nd < lab.d[e.to] || (nd == lab.d[e.to] && ndelta > lab.delta[e.to]) ||
                          (nd == lab.d[e.to] && ndelta == lab.delta[e.to] && lab.pred_edge[e.to] >= 0 &&
                           e.arc_id < lab.edges[lab.pred_edge[e.to]].arc_id);
            if (better) {
                lab.d[e.to] = nd;
                lab.delta[e.to] = ndelta;
                lab.pred_edge[e.to] = ei;
                pq.push({nd, -ndelta, e.arc_id, e.to});
            }
        }
    }
    return lab;
}

}  // namespace incflow
