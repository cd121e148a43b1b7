#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "incflow/network.hpp"
#include "incflow/rng.hpp"

namespace incflow {

struct GeneralParams {
    int n = 6;
    double density = 0.3;            // arc existence probability
    double potential_fraction = 0.3;  // potential | arc exists
    std::int64_t u_max = 1;
    std::uint64_t seed = 0;
};

struct LayeredParams {
    int layers = 2;
    int per_layer = 2;
    double density = 0.3;
    double potential_fraction = 0.3;
    std::int64_t u_max = 1;
    std::uint64_t seed = 0;
};

namespace detail {

inline int add_arc(Network& net, int tail, int head, std::int64_t cap, ArcKind kind) {
    Arc a;
    a.id = net.arc_count();
    a.tail = tail;
    a.head = head;
    a.capacity = cap;
    a.kind = kind;
    net.arcs.push_back(a);
    return a.id;
}

inline std::int64_t default_horizon(const Network& net) {
    return static_cast<std::int64_t>(net.potential_ids().size()) + 1;
}

}  // namespace detail

// Ordered node pairs scanned tail-major, head-minor; per existing pair the
// draws are: existence, then kind, then capacity. Source is node 0, sink n-1.
inline Instance gen_general(const GeneralParams& p) {
    if (p.n < 2 || p.density < 0 || p.density > 1 || p.potential_fraction < 0 ||
        p.potential_fraction > 1 || p.u_max < 1)
        throw std::invalid_argument("gen_general: bad parameters");
    SplitMix64 rng(p.seed);
    Instance inst;
    inst.net.node_count = p.n;
    inst.net.source = 0;
    inst.net.sink = p.n - 1;
    for (int tail = 0; tail < p.n; ++tail) {
        for (int head = 0; head < p.n; ++head) {
            if (tail == head) continue;
            if (!rng.bernoulli(p.density)) continue;
            ArcKind kind = rng.bernoulli(p.potential_fraction) ? ArcKind::Potential : ArcKind::Existing;
            std::int64_t cap = rng.next_in(p.u_max);
            detail::add_arc(inst.net, tail, head, cap, kind);
        }
    }
    inst.horizon = detail::default_horizon(inst.net);
    return inst;
}

// Source feeds every first-layer node and every last-layer node feeds the sink
// (existing arcs at capacity u_max, no random draws). Inter-layer pairs are
// scanned layer by layer, tail-major; draws per pair mirror gen_general.
inline Instance gen_layered(const LayeredParams& p) {
    if (p.layers < 2 || p.per_layer < 1 || p.density < 0 || p.density > 1 ||
        p.potential_fraction < 0 || p.potential_fraction > 1 || p.u_max < 1)
        throw std::invalid_argument("gen_layered: bad parameters");
    SplitMix64 rng(p.seed);
    Instance inst;
    const int n = p.per_layer;
    inst.net.node_count = 2 + p.layers * n;
    inst.net.source = 0;
    inst.net.sink = inst.net.node_count - 1;
    auto node = [&](int layer, int j) { return 1 + (layer - 1) * n + j; };

    for (int j = 0; j < n; ++j) detail::add_arc(inst.net, inst.net.source, node(1, j), p.u_max, ArcKind::Existing);
    for (int layer = 1; layer < p.layers; ++layer) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (!rng.bernoulli(p.density)) continue;
                ArcKind kind =
                    rng.bernoulli(p.potential_fraction) ? ArcKind::Potential : ArcKind::Existing;
                std::int64_t cap = rng.next_in(p.u_max);
                detail::add_arc(inst.net, node(layer, a), node(layer + 1, b), cap, kind);
            }
        }
    }
    for (int j = 0; j < n; ++j)
        detail::add_arc(inst.net, node(p.layers, j), inst.net.sink, p.u_max, ArcKind::Existing);
    inst.horizon = detail::default_horizon(inst.net);
    return inst;
}

struct X3CInstance {
    int n = 1;                                // universe is {1..3n}
    std::vector<std::array<int, 3>> sets;
};

inline void validate_x3c(const X3CInstance& x) {
    if (x.n < 1) throw std::invalid_argument("x3c: n must be positive");
    for (const auto& s : x.sets) {
        if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
            throw std::invalid_argument("x3c: set elements must be distinct");
        for (int e : s)
            if (e < 1 || e > 3 * x.n) throw std::invalid_argument("x3c: element out of range");
    }
}

// Hardness reduction: potential capacity-3 arcs s->v_S, existing unit arcs
// v_S->w_i (i in S) and w_i->t.
inline Instance gen_x3c(const X3CInstance& x, std::int64_t T) {
    validate_x3c(x);
    if (T <= static_cast<std::int64_t>(x.sets.size()))
        throw std::invalid_argument("x3c: horizon must exceed the number of sets");
    Instance inst;
    const int m = static_cast<int>(x.sets.size());
    inst.net.node_count = 2 + m + 3 * x.n;
    inst.net.source = 0;
    inst.net.sink = inst.net.node_count - 1;
    auto v_node = [&](int i) { return 1 + i; };
    auto w_node = [&](int e) { return 1 + m + (e - 1); };

    for (int i = 0; i < m; ++i) detail::add_arc(inst.net, inst.net.source, v_node(i), 3, ArcKind::Potential);
    for (int i = 0; i < m; ++i)
        for (int e : x.sets[static_cast<std::size_t>(i)])
            detail::add_arc(inst.net, v_node(i), w_node(e), 1, ArcKind::Existing);
    for (int e = 1; e <= 3 * x.n; ++e)
        detail::add_arc(inst.net, w_node(e), inst.net.sink, 1, ArcKind::Existing);
    inst.horizon = T;
    return inst;
}

}  // namespace incflow
