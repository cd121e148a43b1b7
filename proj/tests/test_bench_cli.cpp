#include <doctest.h>

#include "incflow/bench.hpp"

using namespace incflow;

namespace {

BenchConfig small_config() {
    BenchConfig cfg;
    cfg.generator = "general";
    cfg.general.n = 7;
    cfg.general.density = 0.3;
    cfg.general.potential_fraction = 0.7;
    cfg.general.u_max = 3;
    cfg.count = 6;
    cfg.seed = 11;
    cfg.methods = {"qi", "qtu", "qtt"};
    cfg.exact_cap = 14;
    return cfg;
}

}  // namespace

TEST_CASE("bench rows carry consistent deltas") {
    BenchReport rep = bench_run(small_config());
    REQUIRE(rep.rows.size() == 6);
    for (const BenchRow& row : rep.rows) {
        std::int64_t best = -1;
        for (const BenchCell& c : row.cells)
            if (c.flow > best) best = c.flow;
        for (const BenchCell& c : row.cells) {
            if (c.flow < 0) continue;
            CHECK(c.delta >= 0.0);
            CHECK(c.delta <= 1.0);
            if (c.flow == best) CHECK(c.delta == 0.0);
        }
        // exact present and never beaten
        const BenchCell& exact = row.cells.back();
        CHECK(exact.method == "exact");
        if (exact.flow >= 0) CHECK(exact.flow == best);
    }
}

TEST_CASE("single-method bench has zero deltas by definition") {
    BenchConfig cfg = small_config();
    cfg.methods = {"qi"};
    cfg.run_exact = false;
    BenchReport rep = bench_run(cfg);
    for (const BenchRow& row : rep.rows)
        for (const BenchCell& c : row.cells) CHECK(c.delta == 0.0);
}

TEST_CASE("bench CSV is reproducible apart from timing columns") {
    BenchReport a = bench_run(small_config());
    BenchReport b = bench_run(small_config());
    CHECK(a.csv(false) == b.csv(false));
    CHECK(a.csv(false).find("_time") == std::string::npos);
    CHECK(a.csv(true).find("qi_time") != std::string::npos);
    // header + one line per instance
    int lines = 0;
    for (char ch : a.csv(false))
        if (ch == '\n') ++lines;
    CHECK(lines == 7);
}

TEST_CASE("layered bench cell") {
    BenchConfig cfg;
    cfg.generator = "layered";
    cfg.layered.layers = 3;
    cfg.layered.per_layer = 2;
    cfg.layered.density = 0.5;
    cfg.layered.potential_fraction = 0.5;
    cfg.layered.u_max = 3;
    cfg.count = 4;
    cfg.seed = 5;
    cfg.exact_cap = 12;
    BenchReport rep = bench_run(cfg);
    CHECK(rep.rows.size() == 4);
    CHECK(rep.average_delta.count("qi") == 1);
}
