#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace incflow {

enum class ArcKind { Existing, Potential };

struct Arc {
    int id = 0;
    int tail = 0;
    int head = 0;
    std::int64_t capacity = 1;
    ArcKind kind = ArcKind::Existing;
};

// Directed s-t network. Arc ids are dense 0..|A|-1; arcs[i].id == i.
struct Network {
    int node_count = 0;
    int source = 0;
    int sink = 0;
    std::vector<Arc> arcs;

    int arc_count() const { return static_cast<int>(arcs.size()); }

    std::vector<int> potential_ids() const {
        std::vector<int> ids;
        for (const Arc& a : arcs)
            if (a.kind == ArcKind::Potential) ids.push_back(a.id);
        return ids;
    }

    std::vector<int> existing_ids() const {
        std::vector<int> ids;
        for (const Arc& a : arcs)
            if (a.kind == ArcKind::Existing) ids.push_back(a.id);
        return ids;
    }

    bool unit_capacities() const {
        for (const Arc& a : arcs)
            if (a.capacity != 1) return false;
        return true;
    }
};

// Network plus planning horizon.
struct Instance {
    Network net;
    std::int64_t horizon = 1;
};

struct FlowResult {
    std::int64_t value = 0;
    std::vector<std::int64_t> flow;  // per arc id; zero on unusable arcs
};

struct UnitCapacityRequired : std::runtime_error {
    UnitCapacityRequired() : std::runtime_error("operation requires all arc capacities equal to 1") {}
};

struct HorizonTooShort : std::runtime_error {
    explicit HorizonTooShort(const std::string& what) : std::runtime_error(what) {}
};

inline std::vector<std::string> validate_network(const Network& net) {
    std::vector<std::string> violations;
    auto bad = [&](const std::string& msg) { violations.push_back(msg); };

    if (net.node_count < 2) bad("node_count must be at least 2");
    if (net.source == net.sink) bad("source equals sink");
    auto node_ok = [&](int v) { return v >= 0 && v < net.node_count; };
    if (!node_ok(net.source)) bad("source out of range");
    if (!node_ok(net.sink)) bad("sink out of range");

    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
        const Arc& a = net.arcs[i];
        const std::string where = "arc " + std::to_string(i) + ": ";
        if (a.id != static_cast<int>(i)) bad(where + "id not dense (expected " + std::to_string(i) + ")");
        if (!node_ok(a.tail)) bad(where + "tail out of range");
        if (!node_ok(a.head)) bad(where + "head out of range");
        if (a.tail == a.head) bad(where + "self-loop");
        if (a.capacity < 1) bad(where + "capacity < 1");
    }
    return violations;
}

// Usable-arc mask from a set of built potential arc ids: existing arcs plus `built`.
inline std::vector<char> usable_mask(const Network& net, const std::vector<int>& built) {
    std::vector<char> mask(net.arcs.size(), 0);
    for (const Arc& a : net.arcs)
        if (a.kind == ArcKind::Existing) mask[a.id] = 1;
    for (int id : built) mask.at(id) = 1;
    return mask;
}

inline std::vector<char> full_mask(const Network& net) {
    return std::vector<char>(net.arcs.size(), 1);
}

}  // namespace incflow
