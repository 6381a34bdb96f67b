#include "rkcs/bench.hpp"

#include "rkcs/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <thread>

namespace rkcs {

ReferenceOptima ReferenceOptima::builtin() {
    return ReferenceOptima({
        {"eil51", 426},     {"berlin52", 7542}, {"st70", 675},      {"pr76", 108159}, {"eil76", 538},
        {"kroA100", 21282}, {"rd100", 7910},    {"eil101", 629},    {"pr124", 59030}, {"bier127", 118282},
        {"ch130", 6110},    {"pr136", 96772},   {"pr144", 58537},   {"rat195", 2323},
    });
}

ReferenceOptima ReferenceOptima::parse(std::istream& in) {
    std::map<std::string, Length> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("expected 'name,optimum'", lineno);
        const std::string name = line.substr(0, comma);
        const std::string value = line.substr(comma + 1);
        if (lineno == 1 && name == "name") continue;
        char* end = nullptr;
        const long long v = std::strtoll(value.c_str(), &end, 10);
        if (name.empty() || end == value.c_str() || *end != '\0' || v < 0) {
            throw ParseError("bad optimum entry '" + line + "'", lineno);
        }
        values[name] = v;
    }
    return ReferenceOptima(std::move(values));
}

ReferenceOptima ReferenceOptima::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open optima file '" + path.string() + "'");
    return parse(in);
}

ReferenceOptima ReferenceOptima::from_environment() {
    if (const char* path = std::getenv(kOptimaEnvVar); path != nullptr && *path != '\0') return load(path);
    return builtin();
}

std::optional<Length> ReferenceOptima::find(const std::string& name) const {
    if (auto it = values_.find(name); it != values_.end()) return it->second;
    return std::nullopt;
}

RunStats aggregate(const std::string& instance_name, const std::vector<RunRecord>& records,
                   std::optional<Length> optimum) {
    RKCS_EXPECTS(!records.empty(), "cannot aggregate zero runs");
    RunStats s;
    s.instance_name = instance_name;
    s.optimum = optimum;
    s.runs = records.size();
    s.best = records.front().cost;
    s.worst = records.front().cost;
    Length sum = 0;
    double time = 0.0;
    for (const auto& r : records) {
        s.best = std::min(s.best, r.cost);
        s.worst = std::max(s.worst, r.cost);
        sum += r.cost;
        time += r.wall_time_s;
    }
    s.average = static_cast<double>(sum) / static_cast<double>(records.size());
    s.wall_time_per_run = time / static_cast<double>(records.size());
    if (optimum && *optimum > 0) {
        s.gap_percent = (s.average - static_cast<double>(*optimum)) / static_cast<double>(*optimum) * 100.0;
    }
    return s;
}

const RunRecord& BenchmarkResult::best_run() const {
    RKCS_EXPECTS(!runs.empty(), "no runs recorded");
    return *std::min_element(runs.begin(), runs.end(),
                             [](const RunRecord& a, const RunRecord& b) { return a.cost < b.cost; });
}

BenchmarkResult run_benchmark(const Instance& inst, const SolverParams& params, const BenchmarkOptions& options,
                              const ReferenceOptima& optima) {
    RKCS_EXPECTS(options.runs >= 1, "runs must be positive");
    params.validate();

    BenchmarkResult result;
    result.instance_name = inst.name();
    result.dimension = inst.dimension();
    result.params = params;
    result.options = options;
    result.runs.resize(options.runs);

    std::size_t workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
    workers = std::clamp<std::size_t>(workers, 1, options.runs);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t idx = next++; idx < options.runs; idx = next++) {
            try {
                SolverParams p = params;
                p.seed = options.base_seed + idx;
                const auto start = std::chrono::steady_clock::now();
                SolveResult solved = solve(inst, p);
                const auto stop = std::chrono::steady_clock::now();

                RunRecord& rec = result.runs[idx];
                rec.run = idx;
                rec.seed = p.seed;
                rec.cost = solved.best.cost();
                rec.generations = solved.generations;
                rec.wall_time_s = std::chrono::duration<double>(stop - start).count();
                rec.tour.assign(solved.best.order().begin(), solved.best.order().end());
                if (options.keep_traces) rec.trace = std::move(solved.trace);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    const auto optimum = optima.find(inst.name());
    if (!optimum) {
        result.warnings.push_back(
            fmt::format("no reference optimum for '{}'; gap not reported", inst.name()));
    }
    result.stats = aggregate(inst.name(), result.runs, optimum);
    return result;
}

BenchmarkResult run_benchmark(const std::filesystem::path& instance_path, const SolverParams& params,
                              const BenchmarkOptions& options, const ReferenceOptima& optima) {
    const Instance inst = load_instance(instance_path);
    return run_benchmark(inst, params, options, optima);
}

std::vector<std::filesystem::path> list_instances(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".tsp") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
    return files;
}

GapRow gap_report(const RunStats& stats, const ReferenceOptima& optima) {
    GapRow row;
    row.instance_name = stats.instance_name;
    row.average = stats.average;
    row.optimum = optima.find(stats.instance_name);
    if (row.optimum && *row.optimum > 0) {
        const auto opt = static_cast<double>(*row.optimum);
        row.gap_percent = (stats.average - opt) / opt * 100.0;
        row.gap_text = fmt::format("{:.2f}", *row.gap_percent);
    } else {
        row.gap_text = "n/a";
    }
    return row;
}

VerifyResult verify_tour(const Instance& inst, const TourFile& tour, std::optional<Length> optimum) {
    VerifyResult out;
    out.optimum = optimum;
    const std::size_t m = inst.dimension();
    if (tour.declared_dimension != 0 && tour.declared_dimension != m) {
        out.reason = fmt::format("tour DIMENSION {} does not match instance dimension {}", tour.declared_dimension, m);
        return out;
    }
    if (tour.order.size() != m) {
        out.reason = fmt::format("tour lists {} cities, instance has {}", tour.order.size(), m);
        return out;
    }
    std::vector<bool> seen(m, false);
    for (const City c : tour.order) {
        if (c < 0 || static_cast<std::size_t>(c) >= m) {
            out.reason = fmt::format("node id {} is out of range", c + 1);
            return out;
        }
        if (seen[static_cast<std::size_t>(c)]) {
            out.reason = fmt::format("node id {} is visited more than once", c + 1);
            return out;
        }
        seen[static_cast<std::size_t>(c)] = true;
    }
    out.cost = tour_cost(inst, tour.order);
    out.verdict = (optimum && *out.cost == *optimum) ? Verdict::ValidOptimal : Verdict::Valid;
    return out;
}

int exit_code(Verdict v) noexcept {
    switch (v) {
        case Verdict::ValidOptimal: return 0;
        case Verdict::Valid: return 1;
        case Verdict::Invalid: return 2;
    }
    return 2;
}

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::ValidOptimal: return "valid-optimal";
        case Verdict::Valid: return "valid";
        case Verdict::Invalid: return "invalid";
    }
    return "invalid";
}

}  // namespace rkcs
