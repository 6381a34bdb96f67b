#pragma once

#include "rkcs/bench.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>

namespace rkcs {

enum class OutputFormat { Table, Csv, Json };

[[nodiscard]] std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept;

/// Aligned text table: Instance(opt), Best, Average, Worst, Gap%, Time/run.
void write_table(std::ostream& out, std::span<const BenchmarkResult> results);

/// One `summary` row per instance followed by one `run` row per run.
void write_csv(std::ostream& out, std::span<const BenchmarkResult> results);

/// Same content as the CSV plus the solver parameters and best tours
/// (1-based ids). Wall-clock fields are the only nondeterministic values and
/// all carry "wall_time" in their key.
void write_json(std::ostream& out, std::span<const BenchmarkResult> results);

void write_report(std::ostream& out, std::span<const BenchmarkResult> results, OutputFormat format);

/// Per-generation incumbent costs: instance,run,generation,best_cost.
/// Requires results produced with keep_traces.
void write_trace_csv(std::ostream& out, std::span<const BenchmarkResult> results);

}  // namespace rkcs
