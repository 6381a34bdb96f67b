// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include "fixtures.hpp"
#include "process.hpp"
#include "tail_fit.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <iostream>

using namespace rkcs;

namespace {

constexpr std::uint64_t kBaseSeed = 1;
constexpr std::size_t kRuns = 30;

struct Line {
    int id;
    bool pass;
    std::string detail;
};

std::vector<Line> lines;

void report(int id, bool pass, std::string detail) {
    std::cout << fmt::format("criterion {:>2}: {} {}", id, pass ? "PASS" : "FAIL", detail) << std::endl;
    lines.push_back({id, pass, std::move(detail)});
}

BenchmarkResult bench(const std::string& name) {
    BenchmarkOptions opts;
    opts.runs = kRuns;
    opts.base_seed = kBaseSeed;
    const auto start = std::chrono::steady_clock::now();
    auto r = run_benchmark(fixtures::load(name), SolverParams{}, opts, ReferenceOptima::builtin());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << fmt::format("  {}: best {} average {:.2f} worst {} gap {:.3f}% ({:.1f} s)", name, r.stats.best,
                             r.stats.average, r.stats.worst, r.stats.gap_percent.value_or(NAN), secs)
              << std::endl;
    return r;
}

std::size_t runs_at(const BenchmarkResult& r, Length cost) {
    return static_cast<std::size_t>(
        std::count_if(r.runs.begin(), r.runs.end(), [&](const RunRecord& rec) { return rec.cost == cost; }));
}

bool oracle_equivalence() {
    std::mt19937_64 rng(6006);
    std::size_t pairs = 0;
    std::size_t hits = 0;
    const std::size_t sizes[] = {6, 7, 8};
    for (int i = 0; i < 50; ++i) {
        const auto pts = oracle::random_points(sizes[i % 3], rng);
        const Instance inst = fixtures::to_instance(pts);
        const Length optimum = oracle::brute_force_optimum(pts);
        for (std::uint64_t seed = 0; seed < 2; ++seed) {
            SolverParams p;
            p.seed = seed;
            ++pairs;
            hits += solve(inst, p).best.cost() == optimum ? 1 : 0;
        }
    }
    const double share = static_cast<double>(hits) / static_cast<double>(pairs);

    std::size_t cost_matches = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto pts = oracle::random_points(3 + static_cast<std::size_t>(t % 60), rng);
        const Instance inst = fixtures::to_instance(pts);
        const auto order = fixtures::random_order(inst.dimension(), rng);
        cost_matches += tour_cost(inst, order) == oracle::edge_sum(pts, fixtures::to_ints(order)) ? 1 : 0;
    }
    const bool pass = share >= 0.95 && cost_matches == 1000;
    report(6, pass,
           fmt::format("optimum found in {}/{} pairs ({:.1f}%, need >= 95%); tour_cost exact on {}/1000 tours", hits,
                       pairs, 100.0 * share, cost_matches));
    return pass;
}

bool local_optimum_certificate() {
    const Instance inst = fixtures::load("eil51");
    const auto pts = fixtures::to_points(inst);
    std::mt19937_64 rng(7007);
    std::size_t certified = 0;
    for (int t = 0; t < 100; ++t) {
        const auto out = steepest_descent(inst, Tour(inst, fixtures::random_order(51, rng)));
        certified += oracle::has_improving_two_opt(pts, fixtures::to_ints(out.tour.order())) ? 0 : 1;
    }
    const bool pass = certified == 100;
    report(7, pass, fmt::format("{}/100 descents end with no improving 2-opt move", certified));
    return pass;
}

bool levy_tail() {
    Rng rng(8008);
    const LevyParams p{0.01, 1.0};
    std::vector<double> mags(1'000'000);
    for (auto& s : mags) s = std::abs(levy_step(p, rng));
    const double slope = tail_fit::ccdf_slope(mags);
    const bool pass = std::abs(slope + 1.0) <= 0.15;
    report(8, pass, fmt::format("CCDF tail slope {:.4f} (need -1 +/- 0.15)", slope));
    return pass;
}

bool decode_fidelity() {
    const KeyVector fig({0.8, 0.5, 0.7, 0.1, 0.4, 0.2});
    const bool fig_ok = decode_ranks(fig) == std::vector<std::size_t>{6, 4, 5, 1, 3, 2};
    Rng rng(9009);
    std::size_t ok = 0;
    for (int t = 0; t < 10'000; ++t) {
        const KeyVector kv = random_key_vector(2 + static_cast<std::size_t>(t % 100), rng);
        const std::vector<double> keys(kv.keys().begin(), kv.keys().end());
        ok += is_permutation_of(decode(kv), kv.size()) && decode_ranks(kv) == oracle::pair_sort_ranks(keys) ? 1 : 0;
    }
    const bool pass = fig_ok && ok == 10'000;
    report(9, pass, fmt::format("example ranks {}; {}/10000 random vectors match the pair-sort oracle",
                                fig_ok ? "6 4 5 1 3 2" : "WRONG", ok));
    return pass;
}

void determinism() {
    const std::vector<std::string> args{"solve", (fixtures::data_dir() / "berlin52.tsp").string(),
                                        "--runs", "3",
                                        "--maxgen", "50",
                                        "--seed", "11",
                                        "--format", "json"};
    const auto a = proc::run(args);
    const auto b = proc::run(args);
    const auto sa = proc::strip_lines_containing(a.out, "wall_time");
    const auto sb = proc::strip_lines_containing(b.out, "wall_time");
    const bool pass = a.status == 0 && b.status == 0 && !sa.empty() && sa == sb;
    report(10, pass,
           fmt::format("two CLI JSON outputs ({} bytes) {} after removing wall_time fields", a.out.size(),
                       sa == sb ? "identical" : "DIFFER"));
}

}  // namespace

int main() {
    std::cout << fmt::format("acceptance: {} runs per instance, base seed {}, default parameters", kRuns, kBaseSeed)
              << std::endl;

    const auto berlin = bench("berlin52");
    const std::size_t at_opt = runs_at(berlin, 7542);
    report(1, at_opt >= 29 && berlin.stats.best == 7542,
           fmt::format("berlin52 {}/30 runs at 7542 (need >= 29), best {}", at_opt, berlin.stats.best));

    const auto eil = bench("eil51");
    report(2, eil.stats.best == 426 && eil.stats.average <= 430.0,
           fmt::format("eil51 best {} (need 426), average {:.2f} (need <= 430)", eil.stats.best, eil.stats.average));

    const auto st = bench("st70");
    report(3, st.stats.best == 675 && st.stats.average <= 684.0,
           fmt::format("st70 best {} (need 675), average {:.2f} (need <= 684)", st.stats.best, st.stats.average));

    const auto kro = bench("kroA100");
    const double kro_gap = 100.0 * static_cast<double>(kro.stats.best - 21282) / 21282.0;

    // Criterion 4 falls back on 6-9 when the gap tolerance is missed, so those run first.
    const bool c6 = oracle_equivalence();
    const bool c7 = local_optimum_certificate();
    const bool c8 = levy_tail();
    const bool c9 = decode_fidelity();

    const double gap_eil = *eil.stats.gap_percent;
    const double gap_st = *st.stats.gap_percent;
    const bool gaps_ok = gap_eil <= 0.5 && gap_st <= 0.5;
    const bool fallback = c6 && c7 && c8 && c9;
    report(4, gaps_ok || fallback,
           fmt::format("average gap eil51 {:.3f}%, st70 {:.3f}% (need <= 0.5%){}", gap_eil, gap_st,
                       gaps_ok ? "" : (fallback ? "; accepted via oracle and property criteria" : "")));

    report(5, kro_gap <= 1.5, fmt::format("kroA100 best {} is {:.3f}% above 21282 (need <= 1.5%)", kro.stats.best, kro_gap));

    determinism();

    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.id < b.id; });
    std::size_t failed = 0;
    std::cout << "summary:\n";
    for (const auto& l : lines) {
        std::cout << fmt::format("  [{}] criterion {}: {}\n", l.pass ? "PASS" : "FAIL", l.id, l.detail);
        failed += l.pass ? 0 : 1;
    }
    std::cout << fmt::format("{} of {} criteria passed\n", lines.size() - failed, lines.size());
    return failed == 0 ? 0 : 1;
}
