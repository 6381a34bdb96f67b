// rkcs: run random-key cuckoo search on TSPLIB instances and check tours.
//
//   rkcs solve  <file.tsp> [options]
//   rkcs bench  <dir>      [options]
//   rkcs verify <file.tsp> <file.tour>
//
// Exit status: 0 success (verify: valid and optimal), 1 verify: valid but not
// known optimal, 2 verify: invalid tour, 3 runtime error (I/O, parse).

#include <rkcs/rkcs.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>

namespace {

struct RunOptions {
    std::size_t runs = 1;
    std::uint64_t seed = 0;
    std::size_t workers = 0;
    std::string format = "table";
    std::string trace_path;
    std::string tour_path;
    std::string optima_path;
    std::string smart_target = "best";
    std::optional<long long> target;
    rkcs::SolverParams params;
};

void add_run_options(CLI::App& cmd, RunOptions& o) {
    auto& p = o.params;
    cmd.add_option("--runs", o.runs, "Independent runs per instance")->capture_default_str()->check(CLI::PositiveNumber);
    cmd.add_option("--seed", o.seed, "Base seed; run r uses seed + r")->capture_default_str();
    cmd.add_option("--n", p.population, "Population size")->capture_default_str()->check(CLI::PositiveNumber);
    cmd.add_option("--pc", p.p_c, "Fraction of smart cuckoos")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--pa", p.p_a, "Fraction of abandoned nests")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--maxgen", p.max_gen, "Generations per run")->capture_default_str()->check(CLI::PositiveNumber);
    cmd.add_option("--alpha", p.levy.alpha, "Levy step scale")->capture_default_str()->check(CLI::PositiveNumber);
    cmd.add_option("--lambda", p.levy.lambda, "Levy tail index in (0, 2]")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 2.0));
    cmd.add_option("--normal-min", p.normal_width.min_fraction, "Normal move width, lower fraction of m")
        ->capture_default_str();
    cmd.add_option("--normal-max", p.normal_width.max_fraction, "Normal move width, upper fraction of m")
        ->capture_default_str();
    cmd.add_option("--jump-min", p.jump_width.min_fraction, "Abandonment jump width, lower fraction of m")
        ->capture_default_str();
    cmd.add_option("--jump-max", p.jump_width.max_fraction, "Abandonment jump width, upper fraction of m")
        ->capture_default_str();
    cmd.add_option("--smart-target", o.smart_target, "Nests worked by smart cuckoos")
        ->capture_default_str()
        ->check(CLI::IsMember({"best", "random"}));
    cmd.add_option("--target", o.target, "Stop a run once this cost is reached");
    cmd.add_option("--workers", o.workers, "Concurrent runs (0 = hardware threads)")->capture_default_str();
    cmd.add_option("--format", o.format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd.add_option("--trace", o.trace_path, "Write per-generation best costs as CSV");
    cmd.add_option("--optima", o.optima_path,
                   fmt::format("Reference optima file (name,optimum); defaults to ${} or the built-in table",
                               rkcs::kOptimaEnvVar));
}

rkcs::ReferenceOptima load_optima(const std::string& path) {
    return path.empty() ? rkcs::ReferenceOptima::from_environment() : rkcs::ReferenceOptima::load(path);
}

int run_instances(const std::vector<std::filesystem::path>& files, RunOptions& o) {
    o.params.smart_target = o.smart_target == "random" ? rkcs::SmartTarget::Random : rkcs::SmartTarget::BestRanked;
    if (o.target) o.params.target_cost = *o.target;
    const auto optima = load_optima(o.optima_path);

    rkcs::BenchmarkOptions bench;
    bench.runs = o.runs;
    bench.base_seed = o.seed;
    bench.workers = o.workers;
    bench.keep_traces = !o.trace_path.empty();

    std::vector<rkcs::BenchmarkResult> results;
    for (const auto& file : files) {
        results.push_back(rkcs::run_benchmark(file, o.params, bench, optima));
        for (const auto& w : results.back().warnings) std::cerr << "warning: " << w << '\n';
    }

    rkcs::write_report(std::cout, results, *rkcs::parse_output_format(o.format));

    if (!o.trace_path.empty()) {
        std::ofstream trace(o.trace_path);
        if (!trace) throw std::runtime_error("cannot write '" + o.trace_path + "'");
        rkcs::write_trace_csv(trace, results);
    }
    if (!o.tour_path.empty() && !results.empty()) {
        std::ofstream tour(o.tour_path);
        if (!tour) throw std::runtime_error("cannot write '" + o.tour_path + "'");
        const auto& r = results.front();
        rkcs::write_tour(tour, fmt::format("{}.{}.tour", r.instance_name, r.best_run().cost), r.best_run().tour);
    }
    return 0;
}

int verify(const std::string& tsp_path, const std::string& tour_path, const std::string& optima_path) {
    const auto inst = rkcs::load_instance(tsp_path);
    const auto tour = rkcs::load_tour(tour_path);
    const auto optima = load_optima(optima_path);
    const auto result = rkcs::verify_tour(inst, tour, optima.find(inst.name()));

    std::cout << rkcs::to_string(result.verdict);
    if (result.cost) std::cout << " cost=" << *result.cost;
    if (result.optimum) std::cout << " optimum=" << *result.optimum;
    if (!result.reason.empty()) std::cout << " reason=\"" << result.reason << '"';
    std::cout << '\n';
    return rkcs::exit_code(result.verdict);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random-key cuckoo search for the symmetric Euclidean TSP"};
    app.require_subcommand(1);

    RunOptions solve_opts;
    std::string tsp_file;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one TSPLIB instance");
    solve_cmd->add_option("file", tsp_file, "TSPLIB .tsp file")->required();
    solve_cmd->add_option("--tour-out", solve_opts.tour_path, "Write the best tour in TSPLIB .tour format");
    add_run_options(*solve_cmd, solve_opts);

    RunOptions bench_opts;
    bench_opts.runs = 30;
    std::string bench_dir;
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark every .tsp file in a directory");
    bench_cmd->add_option("dir", bench_dir, "Directory of TSPLIB .tsp files")->required();
    add_run_options(*bench_cmd, bench_opts);

    std::string verify_tsp;
    std::string verify_tour;
    std::string verify_optima;
    auto* verify_cmd = app.add_subcommand("verify", "Check a tour file against an instance");
    verify_cmd->add_option("tsp", verify_tsp, "TSPLIB .tsp file")->required();
    verify_cmd->add_option("tour", verify_tour, "TSPLIB .tour file")->required();
    verify_cmd->add_option("--optima", verify_optima, "Reference optima file (name,optimum)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) return run_instances({tsp_file}, solve_opts);
        if (*bench_cmd) {
            const auto files = rkcs::list_instances(bench_dir);
            if (files.empty()) throw std::runtime_error("no .tsp files in '" + bench_dir + "'");
            return run_instances(files, bench_opts);
        }
        if (*verify_cmd) return verify(verify_tsp, verify_tour, verify_optima);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
