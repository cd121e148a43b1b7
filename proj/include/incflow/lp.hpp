#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "incflow/maxflow.hpp"
#include "incflow/network.hpp"

namespace incflow {

namespace detail {

inline std::string xvar(int arc, std::int64_t k) {
    return "x_a" + std::to_string(arc) + "_k" + std::to_string(k);
}
inline std::string yvar(int arc, std::int64_t k) {
    return "y_a" + std::to_string(arc) + "_k" + std::to_string(k);
}

// s-out minus s-in terms of one period, e.g. "x_a0_k1 - x_a3_k1".
inline void net_outflow_terms(std::ostringstream& out, const Network& net, int node, std::int64_t k,
                              bool& first) {
    for (const Arc& a : net.arcs) {
        if (a.tail != node && a.head != node) continue;
        bool positive = a.tail == node;
        if (first) {
            if (!positive) out << "- ";
            first = false;
        } else {
            out << (positive ? " + " : " - ");
        }
        out << xvar(a.id, k);
    }
}

}  // namespace detail

// IMFP^1: per-period flow variables x_{ak} and build indicators y_{ak} over
// the whole horizon, one build per period.
inline std::string emit_imfp1(const Instance& inst) {
    const Network& net = inst.net;
    const std::int64_t T = inst.horizon;
    std::vector<int> pot = net.potential_ids();
    std::ostringstream out;
    out << "\\ incflow IMFP1\n";
    out << "\\ nodes=" << net.node_count << " arcs=" << net.arc_count() << " potential=" << pot.size()
        << " T=" << T << "\n";
    out << "Maximize\n obj:";
    {
        bool first = true;
        std::ostringstream terms;
        for (std::int64_t k = 1; k <= T; ++k)
            detail::net_outflow_terms(terms, net, net.source, k, first);
        out << " " << terms.str() << "\n";
    }
    out << "Subject To\n";
    for (int v = 0; v < net.node_count; ++v) {
        if (v == net.source || v == net.sink) continue;
        for (std::int64_t k = 1; k <= T; ++k) {
            std::ostringstream terms;
            bool first = true;
            detail::net_outflow_terms(terms, net, v, k, first);
            if (first) continue;  // isolated node
            out << " cons_v" << v << "_k" << k << ": " << terms.str() << " = 0\n";
        }
    }
    for (const Arc& a : net.arcs) {
        for (std::int64_t k = 1; k <= T; ++k) {
            if (a.kind == ArcKind::Existing)
                out << " cap_a" << a.id << "_k" << k << ": " << detail::xvar(a.id, k)
                    << " <= " << a.capacity << "\n";
            else
                out << " link_a" << a.id << "_k" << k << ": " << detail::xvar(a.id, k) << " - "
                    << a.capacity << " " << detail::yvar(a.id, k) << " <= 0\n";
        }
    }
    for (int a : pot)
        for (std::int64_t k = 2; k <= T; ++k)
            out << " mono_a" << a << "_k" << k << ": " << detail::yvar(a, k - 1) << " - "
                << detail::yvar(a, k) << " <= 0\n";
    for (int a : pot) out << " init_a" << a << ": " << detail::yvar(a, 1) << " = 0\n";
    for (std::int64_t k = 2; k <= T - 1 && !pot.empty(); ++k) {
        out << " build_k" << k << ":";
        bool first = true;
        for (int a : pot) {
            out << (first ? " " : " + ") << detail::yvar(a, k);
            first = false;
        }
        for (int a : pot) out << " - " << detail::yvar(a, k - 1);
        out << " <= 1\n";
    }
    out << "Bounds\n";
    for (const Arc& a : net.arcs)
        for (std::int64_t k = 1; k <= T; ++k) out << " 0 <= " << detail::xvar(a.id, k) << "\n";
    out << "Binaries\n";
    for (int a : pot)
        for (std::int64_t k = 1; k <= T; ++k) out << " " << detail::yvar(a, k) << "\n";
    out << "End\n";
    return out.str();
}

// IMFP^2: minimize built-before-level counts over k = 1..r with flow-value
// right-hand sides f+k; the header comment records TF so the cumulative flow
// TF - objective is recoverable.
inline std::string emit_imfp2(const Instance& inst) {
    const Network& net = inst.net;
    const std::int64_t T = inst.horizon;
    const std::int64_t f = initial_flow(net);
    const std::int64_t F = ultimate_flow(net);
    const std::int64_t r = F - f;
    std::vector<int> pot = net.potential_ids();
    std::ostringstream out;
    out << "\\ incflow IMFP2\n";
    out << "\\ nodes=" << net.node_count << " arcs=" << net.arc_count() << " potential=" << pot.size()
        << " T=" << T << " f=" << f << " F=" << F << " r=" << r << " TF=" << T * F << "\n";
    out << "\\ cumulative flow = TF - objective\n";
    if (r == 0) {
        out << "\\ r=0: constant flow, total = T*F = " << T * F << "\n";
        out << "Minimize\n obj: 0 zero\nSubject To\nBounds\n zero = 0\nEnd\n";
        return out.str();
    }
    out << "Minimize\n obj:";
    {
        bool first = true;
        for (int a : pot)
            for (std::int64_t k = 1; k <= r; ++k) {
                out << (first ? " " : " + ") << detail::yvar(a, k);
                first = false;
            }
        out << "\n";
    }
    out << "Subject To\n";
    for (int v = 0; v < net.node_count; ++v) {
        for (std::int64_t k = 1; k <= r; ++k) {
            std::ostringstream terms;
            bool first = true;
            detail::net_outflow_terms(terms, net, v, k, first);
            if (first) continue;
            std::int64_t rhs = 0;
            if (v == net.source)
                rhs = f + k;
            else if (v == net.sink)
                rhs = -(f + k);
            out << " cons_v" << v << "_k" << k << ": " << terms.str() << " = " << rhs << "\n";
        }
    }
    for (const Arc& a : net.arcs) {
        for (std::int64_t k = 1; k <= r; ++k) {
            if (a.kind == ArcKind::Existing)
                out << " cap_a" << a.id << "_k" << k << ": " << detail::xvar(a.id, k)
                    << " <= " << a.capacity << "\n";
            else
                out << " link_a" << a.id << "_k" << k << ": " << detail::xvar(a.id, k) << " - "
                    << a.capacity << " " << detail::yvar(a.id, k) << " <= 0\n";
        }
    }
    for (int a : pot)
        for (std::int64_t k = 1; k <= r - 1; ++k)
            out << " mono_a" << a << "_k" << k << ": " << detail::yvar(a, k) << " - "
                << detail::yvar(a, k + 1) << " <= 0\n";
    out << "Bounds\n";
    for (const Arc& a : net.arcs)
        for (std::int64_t k = 1; k <= r; ++k) out << " 0 <= " << detail::xvar(a.id, k) << "\n";
    out << "Binaries\n";
    for (int a : pot)
        for (std::int64_t k = 1; k <= r; ++k) out << " " << detail::yvar(a, k) << "\n";
    out << "End\n";
    return out.str();
}

}  // namespace incflow
