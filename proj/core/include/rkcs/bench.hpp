#pragma once

#include "rkcs/solver.hpp"
#include "rkcs/tsplib.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rkcs {

/// Known optimal tour lengths keyed by instance name.
class ReferenceOptima {
public:
    ReferenceOptima() = default;
    explicit ReferenceOptima(std::map<std::string, Length> values) : values_(std::move(values)) {}

    /// Optima of the standard EUC_2D benchmark set shipped with the library
    /// (eil51, berlin52, st70, pr76, eil76, kroA100, rd100, eil101, pr124,
    /// bier127, ch130, pr136, pr144, rat195).
    [[nodiscard]] static ReferenceOptima builtin();

    /// Plain text, one `name,optimum` pair per line. A `name,optimum` header
    /// line, blank lines and lines starting with '#' are skipped.
    [[nodiscard]] static ReferenceOptima parse(std::istream& in);
    [[nodiscard]] static ReferenceOptima load(const std::filesystem::path& path);

    /// The file named by $RKCS_OPTIMA when set, otherwise builtin().
    [[nodiscard]] static ReferenceOptima from_environment();

    [[nodiscard]] std::optional<Length> find(const std::string& name) const;
    [[nodiscard]] const std::map<std::string, Length>& values() const noexcept { return values_; }

private:
    std::map<std::string, Length> values_;
};

inline constexpr const char* kOptimaEnvVar = "RKCS_OPTIMA";

struct RunRecord {
    std::size_t run = 0;
    std::uint64_t seed = 0;
    Length cost = 0;
    std::size_t generations = 0;
    double wall_time_s = 0.0;
    std::vector<City> tour;
    std::vector<Length> trace;  ///< empty unless traces were requested
};

struct RunStats {
    std::string instance_name;
    std::optional<Length> optimum;
    std::size_t runs = 0;
    Length best = 0;
    double average = 0.0;
    Length worst = 0;
    std::optional<double> gap_percent;  ///< (average - optimum) / optimum * 100
    double wall_time_per_run = 0.0;
};

/// Aggregates per-run records. `records` must be non-empty.
[[nodiscard]] RunStats aggregate(const std::string& instance_name, const std::vector<RunRecord>& records,
                                 std::optional<Length> optimum);

struct BenchmarkOptions {
    std::size_t runs = 30;
    std::uint64_t base_seed = 0;
    std::size_t workers = 0;  ///< 0: one per hardware thread
    bool keep_traces = false;
};

struct BenchmarkResult {
    std::string instance_name;
    std::size_t dimension = 0;
    SolverParams params;
    BenchmarkOptions options;
    RunStats stats;
    std::vector<RunRecord> runs;  ///< ordered by run index
    std::vector<std::string> warnings;

    /// Record with the lowest cost (first one on ties).
    [[nodiscard]] const RunRecord& best_run() const;
};

/// Runs `options.runs` independent solves with seeds base_seed, base_seed + 1,
/// ... (params.seed is ignored). Runs may execute concurrently; results do not
/// depend on the worker count. An instance missing from `optima` gets no gap
/// and a warning.
[[nodiscard]] BenchmarkResult run_benchmark(const Instance& inst, const SolverParams& params,
                                            const BenchmarkOptions& options, const ReferenceOptima& optima);
[[nodiscard]] BenchmarkResult run_benchmark(const std::filesystem::path& instance_path, const SolverParams& params,
                                            const BenchmarkOptions& options, const ReferenceOptima& optima);

/// All *.tsp files directly inside `dir`, sorted by file name.
[[nodiscard]] std::vector<std::filesystem::path> list_instances(const std::filesystem::path& dir);

struct GapRow {
    std::string instance_name;
    std::optional<Length> optimum;
    double average = 0.0;
    std::optional<double> gap_percent;
    std::string gap_text;  ///< two decimals, or "n/a" without a reference
};

[[nodiscard]] GapRow gap_report(const RunStats& stats, const ReferenceOptima& optima);

enum class Verdict { ValidOptimal, Valid, Invalid };

struct VerifyResult {
    Verdict verdict = Verdict::Invalid;
    std::optional<Length> cost;  ///< set for valid tours
    std::optional<Length> optimum;
    std::string reason;          ///< why the tour is invalid
};

/// Checks that the tour visits every city of `inst` exactly once and prices it.
[[nodiscard]] VerifyResult verify_tour(const Instance& inst, const TourFile& tour, std::optional<Length> optimum);

/// Process exit status for a verdict: 0 valid-optimal, 1 valid, 2 invalid.
[[nodiscard]] int exit_code(Verdict v) noexcept;
[[nodiscard]] const char* to_string(Verdict v) noexcept;

}  // namespace rkcs
