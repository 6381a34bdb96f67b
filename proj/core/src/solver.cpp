#include "rkcs/solver.hpp"

#include "rkcs/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rkcs {

namespace {

// Guards ceil/floor against 0.6 * 30 landing a hair above or below 18.
constexpr double kFractionSlack = 1e-9;

std::size_t ceil_width(std::size_t m, double fraction) {
    return static_cast<std::size_t>(std::ceil(static_cast<double>(m) * fraction - kFractionSlack));
}

WidthRange width_range(const WidthRule& rule, std::size_t m) noexcept {
    WidthRange r;
    r.lo = std::clamp<std::size_t>(ceil_width(m, rule.min_fraction), 1, m);
    r.hi = std::clamp<std::size_t>(ceil_width(m, rule.max_fraction), r.lo, m);
    return r;
}

SolverState make_state(const Instance& inst, const SolverParams& params) {
    params.validate();
    Rng rng(params.seed);
    auto population = initial_population(inst, params.population, rng);
    const auto best = std::min_element(population.begin(), population.end(),
                                       [](const Nest& a, const Nest& b) { return a.fitness() < b.fitness(); });
    Nest incumbent = *best;
    return SolverState{std::move(population), std::move(incumbent), 0, std::move(rng)};
}

}  // namespace

void SolverParams::validate() const {
    RKCS_EXPECTS(population >= 1, "population size must be positive");
    RKCS_EXPECTS(p_c >= 0.0 && p_c <= 1.0, "p_c must lie in [0, 1]");
    RKCS_EXPECTS(p_a >= 0.0 && p_a <= 1.0, "p_a must lie in [0, 1]");
    RKCS_EXPECTS(max_gen >= 1, "max_gen must be positive");
    levy.validate();
    for (const WidthRule& w : {normal_width, jump_width}) {
        RKCS_EXPECTS(w.min_fraction >= 0.0 && w.min_fraction <= w.max_fraction && w.max_fraction <= 1.0,
                     "width fractions must satisfy 0 <= min <= max <= 1");
    }
}

std::size_t SolverParams::smart_count() const noexcept {
    return std::min(population, ceil_width(population, p_c));
}

std::size_t SolverParams::abandon_count() const noexcept {
    const auto k = static_cast<std::size_t>(std::floor(static_cast<double>(population) * p_a + kFractionSlack));
    return std::min(population, k);
}

WidthRange normal_width_range(const SolverParams& params, std::size_t m) noexcept {
    return width_range(params.normal_width, m);
}

WidthRange jump_width_range(const SolverParams& params, std::size_t m) noexcept {
    const WidthRange normal = normal_width_range(params, m);
    WidthRange r = width_range(params.jump_width, m);
    if (normal.hi < m) r.lo = std::max(r.lo, normal.hi + 1);
    r.hi = std::max(r.hi, r.lo);
    return r;
}

Solver::Solver(const Instance& inst, SolverParams params)
    : inst_(&inst), params_(std::move(params)), state_(make_state(inst, params_)) {
    rank();
}

std::size_t Solver::draw_width(WidthRange range) {
    std::uniform_int_distribution<std::size_t> dist(range.lo, range.hi);
    return dist(state_.rng);
}

void Solver::refresh_best(const Nest& candidate) {
    if (candidate.fitness() < state_.best.fitness()) state_.best = candidate;
}

Nest Solver::move_and_descend(const Nest& nest, std::size_t width) {
    const std::size_t m = inst_->dimension();
    RKCS_EXPECTS(width >= 1 && width <= m, "move width must lie in [1, m]");
    RKCS_EXPECTS(nest.keys.size() == m, "nest does not match the instance");

    // Partial Fisher-Yates: the first `width` entries are a uniform random subset.
    std::vector<City> agents(m);
    std::iota(agents.begin(), agents.end(), City{0});
    for (std::size_t i = 0; i < width; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, m - 1);
        std::swap(agents[i], agents[pick(state_.rng)]);
    }
    agents.resize(width);

    const KeyVector moved = perturb_keys(nest.keys, agents, params_.levy, state_.rng);
    std::vector<City> order = decode(moved);
    steepest_descent_in_place(*inst_, order, tour_cost(*inst_, order), std::numeric_limits<std::size_t>::max());
    KeyVector keys = align_keys(moved, order);
    return Nest{std::move(keys), Tour(*inst_, std::move(order))};
}

PhaseReport Solver::smart_cuckoo_phase() {
    const std::size_t count = params_.smart_count();
    auto& pop = state_.population;

    std::vector<std::size_t> targets(pop.size());
    std::iota(targets.begin(), targets.end(), std::size_t{0});
    if (params_.smart_target == SmartTarget::BestRanked) {
        std::stable_sort(targets.begin(), targets.end(),
                         [&](std::size_t a, std::size_t b) { return pop[a].fitness() < pop[b].fitness(); });
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, targets.size() - 1);
            std::swap(targets[i], targets[pick(state_.rng)]);
        }
    }
    targets.resize(count);

    const WidthRange widths = normal_width_range(params_, inst_->dimension());
    PhaseReport report;
    for (const std::size_t idx : targets) {
        Nest candidate = move_and_descend(pop[idx], draw_width(widths));
        ++report.processed;
        if (candidate.fitness() < pop[idx].fitness()) {
            refresh_best(candidate);
            pop[idx] = std::move(candidate);
            ++report.replaced;
        }
    }
    return report;
}

PhaseReport Solver::cuckoo_from_best_phase() {
    const WidthRange widths = normal_width_range(params_, inst_->dimension());
    Nest candidate = move_and_descend(state_.best, draw_width(widths));

    auto& pop = state_.population;
    std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
    const std::size_t j = pick(state_.rng);

    PhaseReport report{1, 0};
    if (candidate.fitness() < pop[j].fitness()) {
        refresh_best(candidate);
        pop[j] = std::move(candidate);
        report.replaced = 1;
    }
    return report;
}

PhaseReport Solver::abandonment_phase() {
    const std::size_t count = params_.abandon_count();
    auto& pop = state_.population;

    std::vector<std::size_t> ranked(pop.size());
    std::iota(ranked.begin(), ranked.end(), std::size_t{0});
    std::stable_sort(ranked.begin(), ranked.end(),
                     [&](std::size_t a, std::size_t b) { return pop[a].fitness() < pop[b].fitness(); });

    const WidthRange widths = jump_width_range(params_, inst_->dimension());
    PhaseReport report;
    for (std::size_t r = pop.size() - count; r < pop.size(); ++r) {
        const std::size_t idx = ranked[r];
        pop[idx] = move_and_descend(pop[idx], draw_width(widths));
        refresh_best(pop[idx]);
        ++report.processed;
        ++report.replaced;
    }
    rank();
    return report;
}

void Solver::rank() {
    auto& pop = state_.population;
    std::stable_sort(pop.begin(), pop.end(), [](const Nest& a, const Nest& b) { return a.fitness() < b.fitness(); });
    refresh_best(pop.front());
}

Length Solver::step() {
    smart_cuckoo_phase();
    cuckoo_from_best_phase();
    abandonment_phase();  // ends with rank()
    ++state_.generation;
    return state_.best.fitness();
}

SolveResult Solver::run() {
    std::vector<Length> trace;
    trace.reserve(params_.max_gen + 1);
    trace.push_back(state_.best.fitness());
    while (state_.generation < params_.max_gen) {
        if (params_.target_cost && state_.best.fitness() <= *params_.target_cost) break;
        trace.push_back(step());
    }
    return SolveResult{state_.best.tour, std::move(trace), state_.generation};
}

SolveResult solve(const Instance& inst, const SolverParams& params) {
    Solver solver(inst, params);
    return solver.run();
}

}  // namespace rkcs
