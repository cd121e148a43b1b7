#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "incflow/network.hpp"

namespace incflow {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Line-oriented text format, LF endings, space-separated:
//   incflow v1
//   nodes <n> source <s> sink <t> horizon <T>
//   arc <id> <tail> <head> <cap> <E|P>
inline std::string write_instance(const Instance& inst) {
    std::ostringstream out;
    out << "incflow v1\n";
    out << "nodes " << inst.net.node_count << " source " << inst.net.source << " sink "
        << inst.net.sink << " horizon " << inst.horizon << "\n";
    for (const Arc& a : inst.net.arcs)
        out << "arc " << a.id << " " << a.tail << " " << a.head << " " << a.capacity << " "
            << (a.kind == ArcKind::Existing ? 'E' : 'P') << "\n";
    return out.str();
}

inline void write_instance_file(const Instance& inst, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << write_instance(inst);
}

inline Instance read_instance(std::istream& in) {
    Instance inst;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };

    if (!std::getline(in, line)) fail("empty input");
    ++lineno;
    if (line != "incflow v1") fail("expected header 'incflow v1'");

    if (!std::getline(in, line)) fail("missing nodes line");
    ++lineno;
    {
        std::istringstream ls(line);
        std::string kw_nodes, kw_source, kw_sink, kw_horizon;
        if (!(ls >> kw_nodes >> inst.net.node_count >> kw_source >> inst.net.source >> kw_sink >>
              inst.net.sink >> kw_horizon >> inst.horizon) ||
            kw_nodes != "nodes" || kw_source != "source" || kw_sink != "sink" || kw_horizon != "horizon")
            fail("expected 'nodes <n> source <s> sink <t> horizon <T>'");
        if (inst.horizon < 1) fail("horizon must be positive");
    }

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw, kind;
        Arc a;
        if (!(ls >> kw >> a.id >> a.tail >> a.head >> a.capacity >> kind) || kw != "arc")
            fail("expected 'arc <id> <tail> <head> <cap> <E|P>'");
        if (kind == "E")
            a.kind = ArcKind::Existing;
        else if (kind == "P")
            a.kind = ArcKind::Potential;
        else
            fail("arc kind must be E or P");
        if (a.id != inst.net.arc_count()) fail("arc ids must be dense and in order");
        inst.net.arcs.push_back(a);
    }

    auto violations = validate_network(inst.net);
    if (!violations.empty()) throw ParseError("invalid network: " + violations.front());
    return inst;
}

inline Instance read_instance_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_instance(f);
}

}  // namespace incflow
