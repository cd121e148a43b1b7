#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "incflow/exact.hpp"
#include "incflow/gen.hpp"
#include "incflow/heur.hpp"
#include "incflow/network.hpp"

namespace incflow {

struct BenchConfig {
    std::string generator = "general";  // general | layered
    GeneralParams general;
    LayeredParams layered;
    int count = 10;
    std::uint64_t seed = 1;
    std::vector<std::string> methods = {"qi", "qtu", "qtt"};
    bool run_exact = true;
    int exact_cap = 14;
    double time_limit_seconds = 60.0;  // recorded, not enforced
};

struct BenchCell {
    std::string method;
    std::int64_t flow = -1;  // -1: not run / failed
    double delta = 0.0;
    double seconds = 0.0;
    std::string error;
};

struct BenchRow {
    int instance = 0;
    std::int64_t F_minus_f = 0;
    std::vector<BenchCell> cells;
};

struct BenchReport {
    BenchConfig config;
    std::vector<BenchRow> rows;
    std::map<std::string, double> average_delta;
    std::map<std::string, double> average_seconds;

    std::string csv(bool with_times = true) const;
};

inline SolveReport run_method(const Network& net, std::int64_t T, const std::string& method) {
    if (method == "qi") return quickest_increment(net, T);
    if (method == "qipoly") return quickest_increment_poly(net, T);
    if (method == "qtu") return quickest_to_ultimate(net, T);
    if (method == "qtt") return quickest_to_target(net, T);
    throw std::invalid_argument("unknown method: " + method);
}

inline BenchReport bench_run(const BenchConfig& cfg) {
    BenchReport rep;
    rep.config = cfg;
    for (int i = 0; i < cfg.count; ++i) {
        Instance inst;
        if (cfg.generator == "general") {
            GeneralParams p = cfg.general;
            p.seed = cfg.seed + static_cast<std::uint64_t>(i);
            inst = gen_general(p);
        } else if (cfg.generator == "layered") {
            LayeredParams p = cfg.layered;
            p.seed = cfg.seed + static_cast<std::uint64_t>(i);
            inst = gen_layered(p);
        } else {
            throw std::invalid_argument("unknown generator: " + cfg.generator);
        }

        BenchRow row;
        row.instance = i;
        row.F_minus_f = ultimate_flow(inst.net) - initial_flow(inst.net);
        std::int64_t best = -1;
        for (const std::string& m : cfg.methods) {
            BenchCell cell;
            cell.method = m;
            try {
                SolveReport r = run_method(inst.net, inst.horizon, m);
                cell.flow = r.total;
                cell.seconds = r.elapsed_seconds;
            } catch (const std::exception& e) {
                cell.error = e.what();
            }
            if (cell.flow > best) best = cell.flow;
            row.cells.push_back(std::move(cell));
        }
        if (cfg.run_exact) {
            BenchCell cell;
            cell.method = "exact";
            try {
                detail::Stopwatch sw;
                cell.flow = exact_subset_dp(inst.net, inst.horizon, cfg.exact_cap).optimum;
                cell.seconds = sw.seconds();
            } catch (const TooLarge& e) {
                cell.error = e.what();
            }
            if (cell.flow > best) best = cell.flow;
            row.cells.push_back(std::move(cell));
        }
        for (BenchCell& cell : row.cells)
            if (cell.flow >= 0 && best > 0)
                cell.delta = static_cast<double>(best - cell.flow) / static_cast<double>(best);
        rep.rows.push_back(std::move(row));
    }

    std::map<std::string, std::pair<double, int>> dsum, tsum;
    for (const BenchRow& row : rep.rows)
        for (const BenchCell& c : row.cells)
            if (c.flow >= 0) {
                dsum[c.method].first += c.delta;
                dsum[c.method].second += 1;
                tsum[c.method].first += c.seconds;
                tsum[c.method].second += 1;
            }
    for (auto& [m, s] : dsum) rep.average_delta[m] = s.second ? s.first / s.second : 0.0;
    for (auto& [m, s] : tsum) rep.average_seconds[m] = s.second ? s.first / s.second : 0.0;
    return rep;
}

inline std::string BenchReport::csv(bool with_times) const {
    std::ostringstream out;
    std::vector<std::string> methods;
    if (!rows.empty())
        for (const BenchCell& c : rows.front().cells) methods.push_back(c.method);
    out << "instance,F_minus_f";
    for (const std::string& m : methods) {
        out << "," << m << "_flow," << m << "_delta";
        if (with_times) out << "," << m << "_time";
    }
    out << "\n";
    char buf[64];
    for (const BenchRow& row : rows) {
        out << row.instance << "," << row.F_minus_f;
        for (const BenchCell& c : row.cells) {
            out << ",";
            if (c.flow >= 0) out << c.flow;
            std::snprintf(buf, sizeof(buf), "%.6f", c.delta);
            out << "," << buf;
            if (with_times) {
                std::snprintf(buf, sizeof(buf), "%.6f", c.seconds);
                out << "," << buf;
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace incflow
