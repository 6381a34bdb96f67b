#pragma once

#include "rkcs/levy.hpp"
#include "rkcs/random_key.hpp"
#include "rkcs/rng.hpp"
#include "rkcs/tour.hpp"
#include "rkcs/tsplib.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rkcs {

/// How many agents a move perturbs, as fractions of the city count m.
/// The width is drawn uniformly from [max(1, ceil(m * min_fraction)),
/// max(lo, ceil(m * max_fraction))], clipped to m.
struct WidthRule {
    double min_fraction = 0.0;
    double max_fraction = 0.05;
};

struct WidthRange {
    std::size_t lo = 1;
    std::size_t hi = 1;
};

/// Which nests the smart-cuckoo fraction works on.
enum class SmartTarget { BestRanked, Random };

struct SolverParams {
    std::size_t population = 30;
    double p_c = 0.6;  ///< fraction of smart cuckoos
    double p_a = 0.2;  ///< fraction of worst nests abandoned each generation
    std::size_t max_gen = 500;
    LevyParams levy{};
    WidthRule normal_width{0.0, 0.05};
    WidthRule jump_width{0.10, 0.25};
    SmartTarget smart_target = SmartTarget::BestRanked;
    std::uint64_t seed = 0;
    /// Stop as soon as the incumbent reaches this cost. Off by default.
    std::optional<Length> target_cost;

    /// Throws ContractViolation on out-of-range fields.
    void validate() const;

    /// ceil(p_c * n)
    [[nodiscard]] std::size_t smart_count() const noexcept;
    /// floor(p_a * n)
    [[nodiscard]] std::size_t abandon_count() const noexcept;
};

/// Width range for a normal move on m cities.
[[nodiscard]] WidthRange normal_width_range(const SolverParams& params, std::size_t m) noexcept;

/// Width range for an abandonment jump. Its lower bound is pushed above the
/// normal upper bound whenever m allows, so a jump always perturbs more agents.
[[nodiscard]] WidthRange jump_width_range(const SolverParams& params, std::size_t m) noexcept;

struct SolverState {
    std::vector<Nest> population;
    Nest best;  ///< incumbent, never worse than any nest seen so far
    std::size_t generation = 0;
    Rng rng;
};

struct PhaseReport {
    std::size_t processed = 0;
    std::size_t replaced = 0;
};

struct SolveResult {
    Tour best;
    /// trace[g] = incumbent cost after generation g; trace[0] is the initial population.
    std::vector<Length> trace;
    std::size_t generations = 0;
};

/// Random-key cuckoo search. Nests are key vectors decoded to tours; every new
/// candidate is a Levy move in key space followed by 2-opt steepest descent,
/// after which the keys are realigned to the improved tour.
///
/// A generation runs the smart-cuckoo phase, the single cuckoo from the
/// incumbent, then the abandonment phase, and finally ranks the population.
/// Given the same instance and parameters (including seed) every run is
/// identical.
class Solver {
public:
    /// Builds the random initial population and ranks it.
    Solver(const Instance& inst, SolverParams params);

    [[nodiscard]] const SolverState& state() const noexcept { return state_; }
    [[nodiscard]] const SolverParams& params() const noexcept { return params_; }
    [[nodiscard]] const Instance& instance() const noexcept { return *inst_; }

    /// Levy move of `width` random agents, decode, descend to a 2-opt local
    /// optimum, realign keys. `nest` is left untouched.
    [[nodiscard]] Nest move_and_descend(const Nest& nest, std::size_t width);

    PhaseReport smart_cuckoo_phase();
    PhaseReport cuckoo_from_best_phase();
    PhaseReport abandonment_phase();
    /// Sorts the population by ascending cost (stable) and refreshes the incumbent.
    void rank();

    /// One full generation; returns the incumbent cost afterwards.
    Length step();

    [[nodiscard]] SolveResult run();

private:
    std::size_t draw_width(WidthRange range);
    void refresh_best(const Nest& candidate);

    const Instance* inst_;
    SolverParams params_;
    SolverState state_;
};

[[nodiscard]] SolveResult solve(const Instance& inst, const SolverParams& params);

}  // namespace rkcs
