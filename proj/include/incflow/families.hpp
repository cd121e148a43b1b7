#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "incflow/gen.hpp"
#include "incflow/heur.hpp"
#include "incflow/network.hpp"

namespace incflow {

struct KTooSmall : std::runtime_error {
    KTooSmall(const std::string& which, std::int64_t kmin)
        : std::runtime_error(which + " requires k >= " + std::to_string(kmin)) {}
};

// Closed-form targets carried by an adversarial instance. A target of
// nullopt means the family pins no value for that method.
struct FamilyInstance {
    Instance inst;
    std::string which;
    std::int64_t k = 0;
    std::optional<std::int64_t> qi_total;
    std::optional<std::int64_t> qtu_total;
    std::optional<std::int64_t> lower_bound;  // value certified by `certified`
    BuildSchedule certified;
};

enum class Family { F1, F2, F3, F4, F5 };
enum class MatchingFamily { M1, M2 };

namespace detail {

// Chain of `len` arcs from `from` to `to` through fresh interior nodes.
inline std::vector<int> add_chain(Network& net, int from, int to, int len, ArcKind kind,
                                  std::int64_t cap = 1) {
    std::vector<int> ids;
    int prev = from;
    for (int i = 0; i < len; ++i) {
        int next = (i == len - 1) ? to : net.node_count++;
        ids.push_back(add_arc(net, prev, next, cap, kind));
        prev = next;
    }
    return ids;
}

inline void append(BuildSchedule& s, const std::vector<int>& ids) {
    s.insert(s.end(), ids.begin(), ids.end());
}

}  // namespace detail

inline std::int64_t family_k_min(Family which) {
    switch (which) {
        case Family::F1: return 1;
        case Family::F2: return 2;
        case Family::F3: return 2;
        case Family::F4: return 2;
        case Family::F5: return 2;
    }
    return 1;
}

// Adversarial unit-capacity families: potential chains strung between
// existing gate arcs. Arc ids are assigned so that every lexicographic tie
// resolves the way the closed forms require.
inline FamilyInstance gen_family(Family which, std::int64_t k) {
    const char* names[] = {"F1", "F2", "F3", "F4", "F5"};
    std::string name = names[static_cast<int>(which)];
    if (k < family_k_min(which)) throw KTooSmall(name, family_k_min(which));

    FamilyInstance fam;
    fam.which = name;
    fam.k = k;
    Network& net = fam.inst.net;

    if (which == Family::F1) {
        // Two parallel routes; the lower one admits the larger single-path
        // augmentation (3 units), the upper only 1.
        net.node_count = 6;
        net.source = 0;
        net.sink = 5;
        detail::add_arc(net, 0, 1, 1, ArcKind::Existing);  // s->a
        detail::add_arc(net, 2, 5, 1, ArcKind::Existing);  // b->t
        detail::add_arc(net, 0, 3, 3, ArcKind::Existing);  // s->c
        detail::add_arc(net, 4, 5, 3, ArcKind::Existing);  // d->t
        detail::add_arc(net, 1, 2, 1, ArcKind::Potential); // upper a->b
        detail::add_arc(net, 3, 4, 3, ArcKind::Potential); // lower c->d
        fam.inst.horizon = 3;
        return fam;
    }

    if (which == Family::F2 || which == Family::F3) {
        // Gate frame: source gates s->w1,s->w2; sink gates v1->t,v2->t.
        net.node_count = 6;
        net.source = 0;
        net.sink = 5;
        const int w1 = 1, w2 = 2, v1 = 3, v2 = 4;
        detail::add_arc(net, 0, w1, 1, ArcKind::Existing);
        detail::add_arc(net, 0, w2, 1, ArcKind::Existing);
        detail::add_arc(net, v1, 5, 1, ArcKind::Existing);
        detail::add_arc(net, v2, 5, 1, ArcKind::Existing);
        int len = static_cast<int>(k);
        auto pi1 = detail::add_chain(net, w1, v1, len, ArcKind::Potential);
        auto pi2 = detail::add_chain(net, w2, v2, len, ArcKind::Potential);
        if (which == Family::F2) {
            auto cheap = detail::add_chain(net, w1, v2, 2, ArcKind::Potential);
            auto ext = detail::add_chain(net, w2, v1, 2 * len - 2, ArcKind::Potential);
            fam.inst.horizon = 2 * k + 2;
            fam.qtu_total = k + 4;
            fam.qi_total = 2 * k + 2;
            fam.lower_bound = 2 * k + 2;
            detail::append(fam.certified, cheap);
            detail::append(fam.certified, ext);
        } else {
            auto mid = detail::add_chain(net, w1, v2, len - 1, ArcKind::Potential);
            (void)mid;
            fam.inst.horizon = 3 * k;
            fam.qi_total = 2 * k + 2;
            fam.qtu_total = 3 * k;
            fam.lower_bound = 3 * k;
            detail::append(fam.certified, pi1);
            detail::append(fam.certified, pi2);
        }
        return fam;
    }

    if (which == Family::F4) {
        // Four straight tracks C1..C4, a one-arc shortcut w1->v2, a middle
        // trap w3~>v4, and an existing return bridge v2->w1 that lets the
        // C2+C1 arcs double as the reverse route.
        net.node_count = 10;
        net.source = 0;
        net.sink = 9;
        const int w[5] = {0, 1, 2, 3, 4};   // w[1..4]
        const int v[5] = {0, 5, 6, 7, 8};   // v[1..4]
        for (int i = 1; i <= 4; ++i) detail::add_arc(net, 0, w[i], 1, ArcKind::Existing);
        for (int i = 1; i <= 4; ++i) detail::add_arc(net, v[i], 9, 1, ArcKind::Existing);
        detail::add_arc(net, v[2], w[1], 1, ArcKind::Existing);  // bridge
        int len = static_cast<int>(k);
        std::vector<std::vector<int>> tracks;
        for (int i = 1; i <= 4; ++i) tracks.push_back(detail::add_chain(net, w[i], v[i], len, ArcKind::Potential));
        auto shortcut = detail::add_chain(net, w[1], v[2], 1, ArcKind::Potential);
        detail::add_chain(net, w[3], v[4], len - 1, ArcKind::Potential);  // trap
        fam.inst.horizon = 5 * k + 1;
        fam.qtu_total = 10 * k + 4;
        fam.qi_total = 11 * k + 3;
        fam.lower_bound = 13 * k;
        detail::append(fam.certified, shortcut);
        detail::append(fam.certified, tracks[2]);
        detail::append(fam.certified, tracks[3]);
        detail::append(fam.certified, tracks[1]);
        detail::append(fam.certified, tracks[0]);
        return fam;
    }

    // F5: gates s->p, q->t, s->a, b->t; middle p~>q (k-1); diagonals p~>b (k)
    // and a~>q (k) sharing the upper path's gates, so the diagonal pair and
    // the upper route a~>b (2k+1) exclude each other; straight alternatives
    // p~>t and s~>q of k+1 form the ultimate configuration with the upper.
    net.node_count = 6;
    net.source = 0;
    net.sink = 5;
    const int p = 1, q = 2, ua = 3, ub = 4;
    detail::add_arc(net, 0, p, 1, ArcKind::Existing);
    detail::add_arc(net, q, 5, 1, ArcKind::Existing);
    detail::add_arc(net, 0, ua, 1, ArcKind::Existing);
    detail::add_arc(net, ub, 5, 1, ArcKind::Existing);
    int len = static_cast<int>(k);
    detail::add_chain(net, p, q, len - 1, ArcKind::Potential);         // middle
    detail::add_chain(net, p, ub, len, ArcKind::Potential);            // diagonal down
    detail::add_chain(net, ua, q, len, ArcKind::Potential);            // diagonal up
    auto v1 = detail::add_chain(net, p, 5, len + 1, ArcKind::Potential);
    auto v2 = detail::add_chain(net, 0, q, len + 1, ArcKind::Potential);
    auto upper = detail::add_chain(net, ua, ub, 2 * len + 1, ArcKind::Potential);
    fam.inst.horizon = 7 * k + 3;
    fam.qi_total = 10 * k + 9;
    fam.lower_bound = 14 * k + 3;
    fam.qtu_total = 14 * k + 3;
    detail::append(fam.certified, v1);
    detail::append(fam.certified, v2);
    detail::append(fam.certified, upper);
    return fam;
}

// Incremental maximum matching counterexamples. Nodes v_i and w_j sit between
// source and sink gates of capacity 1, so s-t flows are matchings.
inline FamilyInstance gen_matching(MatchingFamily which) {
    FamilyInstance fam;
    fam.which = which == MatchingFamily::M1 ? "M1" : "M2";
    fam.k = 0;
    Network& net = fam.inst.net;

    const int side = which == MatchingFamily::M1 ? 8 : 7;
    net.node_count = 2 + 2 * side;
    net.source = 0;
    net.sink = net.node_count - 1;
    auto v = [&](int i) { return i; };             // v_1..v_side
    auto w = [&](int j) { return side + j; };      // w_1..w_side
    for (int i = 1; i <= side; ++i) detail::add_arc(net, 0, v(i), 1, ArcKind::Existing);
    for (int j = 1; j <= side; ++j) detail::add_arc(net, w(j), net.sink, 1, ArcKind::Existing);

    auto mid = [&](int i, int j, ArcKind kind) { return detail::add_arc(net, v(i), w(j), 1, kind); };

    if (which == MatchingFamily::M1) {
        for (int i : {2, 3, 4, 6, 7, 8}) mid(i, i - 1, ArcKind::Existing);
        std::vector<int> pairs;
        for (int i = 1; i <= 8; ++i) pairs.push_back(mid(i, i, ArcKind::Potential));
        int extra = mid(2, 8, ArcKind::Potential);
        fam.inst.horizon = 10;
        fam.qtu_total = 68;
        fam.qi_total = 69;
        fam.lower_bound = 69;
        fam.certified = {pairs[0], extra, pairs[1], pairs[2], pairs[3],
                         pairs[4], pairs[5], pairs[6], pairs[7]};
    } else {
        mid(2, 1, ArcKind::Existing);
        mid(3, 2, ArcKind::Existing);
        mid(5, 4, ArcKind::Existing);
        mid(6, 5, ArcKind::Existing);
        mid(7, 7, ArcKind::Existing);
        std::vector<int> pairs;
        for (int i = 1; i <= 6; ++i) pairs.push_back(mid(i, i, ArcKind::Potential));
        mid(1, 7, ArcKind::Potential);  // trap in
        mid(7, 6, ArcKind::Potential);  // trap out
        fam.inst.horizon = 9;
        fam.qi_total = 53;
        fam.qtu_total = 54;
        fam.lower_bound = 54;
        fam.certified = pairs;
    }
    return fam;
}

}  // namespace incflow
