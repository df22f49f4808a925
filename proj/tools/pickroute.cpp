#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pickroute/harness.hpp"
#include "pickroute/oracle.hpp"
#include "pickroute/solver.hpp"
#include "pickroute/states.hpp"

using namespace pickroute;

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << content;
}

int cmd_solve(const std::string& path, const std::string& algo) {
    PickInstance inst = load_instance_file(path);
    if (!algo_matches_blocks(algo, inst.layout.blocks))
        throw ValidationError("algorithm " + algo + " does not match a " +
                              std::to_string(inst.layout.blocks) + "-block instance");
    Solution sol = solve_instance(inst, algo);
    std::cout << solution_to_json(sol);
    return 0;
}

int cmd_verify(const std::string& path) {
    PickInstance inst = load_instance_file(path);
    std::vector<std::string> algos = algos_for_blocks(inst.layout.blocks);
    SolveOptions opts;
    std::vector<std::pair<std::string, Length>> lengths;
    for (const std::string& algo : algos)
        lengths.push_back({algo, solve_instance(inst, algo, opts).length});
    bool oracle_ran = false;
    if (inst.picks.size() <= static_cast<size_t>(kOracleMaxPicks)) {
        lengths.push_back({"oracle", oracle_optimal(inst)});
        oracle_ran = true;
    }
    bool agree = true;
    for (const auto& [name, len] : lengths)
        if (len != lengths.front().second) agree = false;
    if (agree) {
        std::cout << "AGREE length=" << format_length(lengths.front().second)
                  << (oracle_ran ? "" : " (oracle skipped: size cap)") << "\n";
        return 0;
    }
    std::cout << "DISAGREE:";
    for (const auto& [name, len] : lengths) std::cout << ' ' << name << '=' << format_length(len);
    std::cout << "\n";
    return 1;
}

int cmd_gen(int blocks, int aisles, int items, std::uint64_t seed, const std::string& out_path) {
    ExperimentPlan plan;
    plan.blocks = blocks;
    plan.aisle_counts = {aisles};
    plan.item_counts = {items};
    PickInstance inst = generate_instance(plan, aisles, items, seed);
    std::string text = instance_to_json(inst);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int cmd_bench(const std::string& plan_path, const std::string& out_dir, int jobs) {
    ExperimentPlan plan;
    if (!plan_path.empty()) {
        std::ifstream in(plan_path);
        if (!in) throw ValidationError("cannot open plan: " + plan_path);
        std::stringstream ss;
        ss << in.rdbuf();
        plan = plan_from_json(ss.str());
    }
    if (const char* env = std::getenv("PICKROUTE_SEED"))
        plan.seed = std::strtoull(env, nullptr, 10);
    if (plan.timing_repeats <= 0) plan.timing_repeats = 32;

    std::filesystem::create_directories(out_dir);
    std::vector<BenchRecord> records = run_suite(plan, jobs);
    write_file(out_dir + "/results.csv", records_to_csv(records));
    Summary summary = summarize(records);
    if (plan.blocks == 1) {
        write_file(out_dir + "/table_single_speedup.csv", single_speedup_csv(summary));
        write_file(out_dir + "/plot_single_runtime.csv", runtime_series_csv(summary, 1));
    } else {
        write_file(out_dir + "/table_two_speedup.csv", two_speedup_csv(summary));
        write_file(out_dir + "/plot_two_runtime.csv", runtime_series_csv(summary, 2));
    }
    write_file(out_dir + "/eval_ratios.csv", eval_ratio_csv(summary));
    std::cout << "wrote " << records.size() << " records to " << out_dir << "\n";
    return 0;
}

int cmd_tables(const std::string& variant_name) {
    auto variant = table_variant_from_name(variant_name);
    if (!variant) throw ValidationError("unknown table variant: " + variant_name);
    std::cout << table_to_csv(transition_table(*variant));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact order-picker routing for single- and two-block warehouses"};
    app.require_subcommand(1);

    std::string instance_path, algo = "single-modified";
    auto* solve = app.add_subcommand("solve", "solve one instance, print the solution as JSON");
    solve->add_option("instance", instance_path, "instance JSON file")->required();
    solve->add_option("--algo", algo,
                      "single-original|single-modified|two-original|two-mod1|two-mod2")
        ->required();

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "run all variants plus the oracle and compare");
    verify->add_option("instance", verify_path, "instance JSON file")->required();

    int blocks = 1, aisles = 5, items = 30;
    std::uint64_t seed = 1;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--blocks", blocks, "1 or 2");
    gen->add_option("--aisles", aisles, "number of aisles");
    gen->add_option("--items", items, "number of picks");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", gen_out, "output file (stdout when omitted)");

    std::string plan_path, bench_out = "bench_out";
    int jobs = 1;
    auto* bench = app.add_subcommand("bench", "run the benchmark suite, write CSV results");
    bench->add_option("--plan", plan_path, "plan JSON (defaults mirror the benchmark grids)");
    bench->add_option("--out", bench_out, "output directory");
    bench->add_option("--jobs", jobs, "worker threads");

    std::string variant_name;
    auto* tables = app.add_subcommand("tables", "dump a generated transition table as CSV");
    tables->add_option("--variant", variant_name, "table variant tag")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(instance_path, algo);
        if (verify->parsed()) return cmd_verify(verify_path);
        if (gen->parsed()) return cmd_gen(blocks, aisles, items, seed, gen_out);
        if (bench->parsed()) return cmd_bench(plan_path, bench_out, jobs);
        if (tables->parsed()) return cmd_tables(variant_name);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
