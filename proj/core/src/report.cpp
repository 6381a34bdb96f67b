#include "rkcs/report.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <ostream>

namespace rkcs {

namespace {

using nlohmann::ordered_json;

const char* to_string(SmartTarget t) noexcept {
    return t == SmartTarget::BestRanked ? "best_ranked" : "random";
}

std::string opt_or(const std::optional<Length>& v, std::string_view fallback) {
    return v ? std::to_string(*v) : std::string(fallback);
}

std::string gap_or(const std::optional<double>& v, std::string_view fallback) {
    return v ? fmt::format("{:.2f}", *v) : std::string(fallback);
}

ordered_json params_json(const SolverParams& p, const BenchmarkOptions& o) {
    ordered_json j;
    j["population"] = p.population;
    j["p_c"] = p.p_c;
    j["p_a"] = p.p_a;
    j["max_gen"] = p.max_gen;
    j["alpha"] = p.levy.alpha;
    j["lambda"] = p.levy.lambda;
    j["normal_width"] = {{"min_fraction", p.normal_width.min_fraction},
                         {"max_fraction", p.normal_width.max_fraction}};
    j["jump_width"] = {{"min_fraction", p.jump_width.min_fraction}, {"max_fraction", p.jump_width.max_fraction}};
    j["smart_target"] = to_string(p.smart_target);
    j["target_cost"] = p.target_cost ? ordered_json(*p.target_cost) : ordered_json(nullptr);
    j["runs"] = o.runs;
    j["base_seed"] = o.base_seed;
    return j;
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept {
    if (name == "table") return OutputFormat::Table;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    return std::nullopt;
}

void write_table(std::ostream& out, std::span<const BenchmarkResult> results) {
    out << fmt::format("{:<22} {:>10} {:>12} {:>10} {:>8} {:>12}\n", "Instance(opt)", "Best", "Average", "Worst",
                       "Gap%", "Time/run(s)");
    for (const auto& r : results) {
        const auto& s = r.stats;
        const std::string label = s.optimum ? fmt::format("{}({})", s.instance_name, *s.optimum) : s.instance_name;
        out << fmt::format("{:<22} {:>10} {:>12.2f} {:>10} {:>8} {:>12.3f}\n", label, s.best, s.average, s.worst,
                           gap_or(s.gap_percent, "n/a"), s.wall_time_per_run);
    }
}

void write_csv(std::ostream& out, std::span<const BenchmarkResult> results) {
    out << "kind,instance,dimension,optimum,run,seed,runs,best,average,worst,gap_percent,generations,wall_time_s\n";
    for (const auto& r : results) {
        const auto& s = r.stats;
        out << fmt::format("summary,{},{},{},,,{},{},{:.4f},{},{},,{:.6f}\n", s.instance_name, r.dimension,
                           opt_or(s.optimum, ""), s.runs, s.best, s.average, s.worst, gap_or(s.gap_percent, ""),
                           s.wall_time_per_run);
    }
    for (const auto& r : results) {
        for (const auto& run : r.runs) {
            out << fmt::format("run,{},{},{},{},{},1,{},{},{},,{},{:.6f}\n", r.instance_name, r.dimension,
                               opt_or(r.stats.optimum, ""), run.run, run.seed, run.cost, run.cost, run.cost,
                               run.generations, run.wall_time_s);
        }
    }
}

void write_json(std::ostream& out, std::span<const BenchmarkResult> results) {
    ordered_json doc;
    doc["tool"] = "rkcs";
    if (!results.empty()) doc["params"] = params_json(results.front().params, results.front().options);
    ordered_json instances = ordered_json::array();
    for (const auto& r : results) {
        const auto& s = r.stats;
        ordered_json inst;
        inst["name"] = s.instance_name;
        inst["dimension"] = r.dimension;
        inst["optimum"] = s.optimum ? ordered_json(*s.optimum) : ordered_json(nullptr);
        inst["runs"] = s.runs;
        inst["best"] = s.best;
        inst["average"] = s.average;
        inst["worst"] = s.worst;
        inst["gap_percent"] = s.gap_percent ? ordered_json(*s.gap_percent) : ordered_json(nullptr);
        inst["wall_time_per_run_s"] = s.wall_time_per_run;

        ordered_json tour = ordered_json::array();
        for (const City c : r.best_run().tour) tour.push_back(c + 1);
        inst["best_tour"] = std::move(tour);

        ordered_json per_run = ordered_json::array();
        for (const auto& run : r.runs) {
            per_run.push_back({{"run", run.run},
                               {"seed", run.seed},
                               {"cost", run.cost},
                               {"generations", run.generations},
                               {"wall_time_s", run.wall_time_s}});
        }
        inst["per_run"] = std::move(per_run);
        if (!r.warnings.empty()) inst["warnings"] = r.warnings;
        instances.push_back(std::move(inst));
    }
    doc["instances"] = std::move(instances);
    out << doc.dump(2) << '\n';
}

void write_report(std::ostream& out, std::span<const BenchmarkResult> results, OutputFormat format) {
    switch (format) {
        case OutputFormat::Table: write_table(out, results); break;
        case OutputFormat::Csv: write_csv(out, results); break;
        case OutputFormat::Json: write_json(out, results); break;
    }
}

void write_trace_csv(std::ostream& out, std::span<const BenchmarkResult> results) {
    out << "instance,run,generation,best_cost\n";
    for (const auto& r : results) {
        for (const auto& run : r.runs) {
            for (std::size_t g = 0; g < run.trace.size(); ++g) {
                out << r.instance_name << ',' << run.run << ',' << g << ',' << run.trace[g] << '\n';
            }
        }
    }
}

}  // namespace rkcs
