#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "incflow/bench.hpp"
#include "incflow/exact.hpp"
#include "incflow/families.hpp"
#include "incflow/gen.hpp"
#include "incflow/heur.hpp"
#include "incflow/io.hpp"
#include "incflow/lp.hpp"
#include "incflow/verify.hpp"

using json = nlohmann::json;
using namespace incflow;

namespace {

json report_to_json(const SolveReport& rep) {
    json j;
    j["method"] = rep.method;
    j["schedule"] = rep.schedule;
    j["period_flows"] = rep.period_flows;
    j["total"] = rep.total;
    json trace = json::array();
    for (auto [lvl, cnt] : rep.trace) trace.push_back({{"flow", lvl}, {"periods", cnt}});
    j["trace"] = trace;
    j["elapsed_seconds"] = rep.elapsed_seconds;
    return j;
}

void print_report(const SolveReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << report_to_json(rep).dump(2) << "\n";
        return;
    }
    std::cout << rep.method << ": total=" << rep.total << " schedule=[";
    for (std::size_t i = 0; i < rep.schedule.size(); ++i) std::cout << (i ? " " : "") << rep.schedule[i];
    std::cout << "]\ntrace:";
    for (auto [lvl, cnt] : rep.trace) std::cout << " " << lvl << "x" << cnt;
    std::cout << "\nelapsed: " << rep.elapsed_seconds << "s\n";
}

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << text;
}

std::vector<std::int64_t> parse_targets(const std::string& spec) {
    std::vector<std::int64_t> targets;
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) targets.push_back(std::stoll(tok));
    return targets;
}

int suite_outcome(const SuiteResult& res, const std::string& format) {
    if (format == "json") {
        json j;
        j["suite"] = res.name;
        j["checked"] = res.checked;
        j["failures"] = res.failures;
        j["notes"] = res.notes;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "suite " << res.name << ": checked=" << res.checked << " failures=" << res.failures
                  << "\n";
        for (const auto& n : res.notes) std::cout << "  " << n << "\n";
    }
    return res.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"incremental maximum flow toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    std::string format = "text";
    auto* format_opt = app.add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string gen_type = "general", gen_out, x3c_sets;
    GeneralParams gp;
    LayeredParams lp;
    int x3c_n = 1;
    std::int64_t gen_horizon = -1;
    gen->add_option("--type", gen_type)->check(CLI::IsMember({"general", "layered", "x3c"}));
    gen->add_option("--n", gp.n, "node count (general)");
    gen->add_option("--layers", lp.layers);
    gen->add_option("--per-layer", lp.per_layer);
    gen->add_option("--density", gp.density);
    gen->add_option("--potential", gp.potential_fraction);
    gen->add_option("--umax", gp.u_max);
    gen->add_option("--seed", gp.seed);
    gen->add_option("--horizon", gen_horizon, "override horizon (default |A_p|+1)");
    gen->add_option("--x3c-n", x3c_n);
    gen->add_option("--x3c-sets", x3c_sets, "e.g. \"1,2,3;4,5,6\"");
    gen->add_option("--out", gen_out);

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "run a heuristic on an instance");
    std::string solve_file, method = "qi", targets_spec;
    solve->add_option("--instance", solve_file)->required();
    solve->add_option("--method", method)->check(CLI::IsMember({"qi", "qipoly", "qtu", "qtt"}));
    solve->add_option("--targets", targets_spec, "comma-separated targets for qtt");

    // ---- exact ----
    auto* exact = app.add_subcommand("exact", "exact optimum via subset DP");
    std::string exact_file;
    bool exact_brute = false;
    int exact_cap = 22;
    exact->add_option("--instance", exact_file)->required();
    exact->add_flag("--brute", exact_brute, "cross-check with permutation brute force");
    exact->add_option("--cap", exact_cap);

    // ---- emit-lp ----
    auto* emit = app.add_subcommand("emit-lp", "write an IMFP formulation as an LP file");
    std::string emit_file, emit_out;
    int formulation = 2;
    emit->add_option("--instance", emit_file)->required();
    emit->add_option("--formulation", formulation)->check(CLI::IsMember({1, 2}));
    emit->add_option("--out", emit_out);

    // ---- family ----
    auto* family = app.add_subcommand("family", "adversarial family instances");
    std::string which = "F2", family_run = "all", family_out;
    std::int64_t fam_k = 10;
    family->add_option("--which", which)
        ->check(CLI::IsMember({"F1", "F2", "F3", "F4", "F5", "M1", "M2"}));
    family->add_option("--k", fam_k);
    family->add_option("--run", family_run)->check(CLI::IsMember({"all", "qi", "qipoly", "qtu", "qtt", "none"}));
    family->add_option("--out", family_out, "write the instance file here");

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "benchmark harness");
    BenchConfig bc;
    std::string bench_methods = "qi,qtu,qtt", bench_csv;
    bool bench_no_exact = false, bench_no_times = false;
    bench->add_option("--generator", bc.generator)->check(CLI::IsMember({"general", "layered"}));
    bench->add_option("--n", bc.general.n);
    bench->add_option("--layers", bc.layered.layers);
    bench->add_option("--per-layer", bc.layered.per_layer);
    bench->add_option("--density", bc.general.density);
    bench->add_option("--potential", bc.general.potential_fraction);
    bench->add_option("--umax", bc.general.u_max);
    bench->add_option("--count", bc.count);
    bench->add_option("--seed", bc.seed);
    bench->add_option("--methods", bench_methods);
    bench->add_flag("--no-exact", bench_no_exact);
    bench->add_flag("--no-times", bench_no_times, "omit timing columns (byte-reproducible CSV)");
    bench->add_option("--exact-cap", bc.exact_cap);
    bench->add_option("--out-csv", bench_csv);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "theory verification suites");
    std::string suite = "unit-capacity";
    int verify_count = 200;
    std::uint64_t verify_seed = 7;
    std::string jsonl_path;
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"unit-capacity", "matching", "witness", "families", "x3c", "labels", "all"}));
    verify->add_option("--count", verify_count);
    verify->add_option("--seed", verify_seed);
    verify->add_option("--jsonl", jsonl_path, "write per-instance verdicts as JSON lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            Instance inst;
            if (gen_type == "general") {
                inst = gen_general(gp);
            } else if (gen_type == "layered") {
                lp.density = gp.density;
                lp.potential_fraction = gp.potential_fraction;
                lp.u_max = gp.u_max;
                lp.seed = gp.seed;
                inst = gen_layered(lp);
            } else {
                X3CInstance x;
                x.n = x3c_n;
                std::istringstream ss(x3c_sets);
                std::string set_tok;
                while (std::getline(ss, set_tok, ';')) {
                    std::array<int, 3> s{};
                    if (std::sscanf(set_tok.c_str(), "%d,%d,%d", &s[0], &s[1], &s[2]) != 3)
                        throw std::invalid_argument("bad --x3c-sets element: " + set_tok);
                    x.sets.push_back(s);
                }
                inst = gen_x3c(x, gen_horizon > 0 ? gen_horizon
                                                  : static_cast<std::int64_t>(x.sets.size()) + 1);
            }
            if (gen_horizon > 0) inst.horizon = gen_horizon;
            write_or_print(write_instance(inst), gen_out);
            return 0;
        }
        if (solve->parsed()) {
            Instance inst = read_instance_file(solve_file);
            SolveReport rep;
            if (method == "qtt" && !targets_spec.empty())
                rep = quickest_to_target(inst.net, inst.horizon, parse_targets(targets_spec));
            else
                rep = run_method(inst.net, inst.horizon, method);
            // reports default to JSON; --format text gives the human-readable form
            print_report(rep, format_opt->count() ? format : "json");
            return 0;
        }
        if (exact->parsed()) {
            Instance inst = read_instance_file(exact_file);
            ExactResult res = exact_subset_dp(inst.net, inst.horizon, exact_cap);
            json j;
            j["optimum"] = res.optimum;
            j["schedule"] = res.schedule;
            j["explored"] = res.explored;
            if (exact_brute) {
                ExactResult bf = brute_force_permutations(inst.net, inst.horizon);
                j["brute_force"] = bf.optimum;
                j["agree"] = bf.optimum == res.optimum;
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (emit->parsed()) {
            Instance inst = read_instance_file(emit_file);
            write_or_print(formulation == 1 ? emit_imfp1(inst) : emit_imfp2(inst), emit_out);
            return 0;
        }
        if (family->parsed()) {
            FamilyInstance fam;
            if (which == "M1" || which == "M2")
                fam = gen_matching(which == "M1" ? MatchingFamily::M1 : MatchingFamily::M2);
            else
                fam = gen_family(static_cast<Family>(which[1] - '1'), fam_k);
            if (!family_out.empty()) write_instance_file(fam.inst, family_out);
            json j;
            j["which"] = fam.which;
            j["k"] = fam.k;
            j["horizon"] = fam.inst.horizon;
            j["potential_arcs"] = fam.inst.net.potential_ids().size();
            if (fam.qi_total) j["predicted"]["qi"] = *fam.qi_total;
            if (fam.qtu_total) j["predicted"]["qtu"] = *fam.qtu_total;
            if (fam.lower_bound) {
                j["predicted"]["lower_bound"] = *fam.lower_bound;
                j["certified_total"] =
                    certified_lower_bound(fam.inst.net, fam.inst.horizon, fam.certified);
            }
            if (family_run != "none") {
                for (const char* m : {"qi", "qipoly", "qtu", "qtt"}) {
                    if (family_run != "all" && family_run != m) continue;
                    SolveReport rep = run_method(fam.inst.net, fam.inst.horizon, m);
                    j["actual"][m] = rep.total;
                }
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (bench->parsed()) {
            bc.layered.density = bc.general.density;
            bc.layered.potential_fraction = bc.general.potential_fraction;
            bc.layered.u_max = bc.general.u_max;
            bc.run_exact = !bench_no_exact;
            bc.methods.clear();
            std::istringstream ss(bench_methods);
            std::string tok;
            while (std::getline(ss, tok, ',')) bc.methods.push_back(tok);
            BenchReport rep = bench_run(bc);
            if (!bench_csv.empty()) write_or_print(rep.csv(!bench_no_times), bench_csv);
            if (format == "csv") {
                std::cout << rep.csv(!bench_no_times);
            } else {
                json j;
                j["generator"] = rep.config.generator;
                j["count"] = rep.config.count;
                for (auto& [m, d] : rep.average_delta) j["average_delta"][m] = d;
                for (auto& [m, t] : rep.average_seconds) j["average_seconds"][m] = t;
                std::cout << j.dump(2) << "\n";
            }
            return 0;
        }
        if (verify->parsed()) {
            std::ofstream jsonl_file;
            std::ostream* jsonl = nullptr;
            if (!jsonl_path.empty()) {
                jsonl_file.open(jsonl_path, std::ios::binary);
                jsonl = &jsonl_file;
            }
            std::vector<SuiteResult> results;
            if (suite == "unit-capacity" || suite == "all")
                results.push_back(verify_unit_capacity(verify_count, verify_seed, jsonl));
            if (suite == "labels" || suite == "all")
                results.push_back(verify_residual_labels(verify_count, verify_seed));
            if (suite == "matching" || suite == "all")
                results.push_back(verify_matching(suite == "all" ? 50 : verify_count, verify_seed, jsonl));
            if (suite == "witness" || suite == "all") results.push_back(verify_witness_range());
            if (suite == "families" || suite == "all") results.push_back(verify_families());
            if (suite == "x3c" || suite == "all") results.push_back(verify_x3c());
            int rc = 0;
            for (const SuiteResult& r : results) rc |= suite_outcome(r, format);
            return rc;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
