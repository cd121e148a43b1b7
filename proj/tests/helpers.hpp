#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "incflow/maxflow.hpp"
#include "incflow/network.hpp"

namespace incflow::test {

// Two nodes, three parallel arcs: existing cap 1, potential q1 cap 1, q2 cap 2.
inline Network p2_network() {
    Network net;
    net.node_count = 2;
    net.source = 0;
    net.sink = 1;
    net.arcs = {{0, 0, 1, 1, ArcKind::Existing},
                {1, 0, 1, 1, ArcKind::Potential},
                {2, 0, 1, 2, ArcKind::Potential}};
    return net;
}

// s->a existing cap 1, a->t potential cap 1.
inline Network diamond_network() {
    Network net;
    net.node_count = 3;
    net.source = 0;
    net.sink = 2;
    net.arcs = {{0, 0, 1, 1, ArcKind::Existing}, {1, 1, 2, 1, ArcKind::Potential}};
    return net;
}

// Min-cut value by enumerating every s-side subset; independent of the solver.
inline std::int64_t min_cut_by_enumeration(const Network& net, const std::vector<char>& usable) {
    const int n = net.node_count;
    std::int64_t best = -1;
    for (std::uint64_t bits = 0; bits < (1ull << (n - 1)); ++bits) {
        // node i (!= source, != sink) is on the s side iff its bit is set;
        // skip assignments that place the sink on the s side.
        std::vector<char> s_side(static_cast<std::size_t>(n), 0);
        s_side[static_cast<std::size_t>(net.source)] = 1;
        int pos = 0;
        bool ok = true;
        for (int v = 0; v < n; ++v) {
            if (v == net.source) continue;
            bool side = bits >> pos++ & 1;
            if (v == net.sink && side) ok = false;
            s_side[static_cast<std::size_t>(v)] = side;
        }
        if (!ok) continue;
        std::int64_t cap = 0;
        for (const Arc& a : net.arcs)
            if (usable[a.id] && s_side[a.tail] && !s_side[a.head]) cap += a.capacity;
        if (best < 0 || cap < best) best = cap;
    }
    return best;
}

}  // namespace incflow::test
