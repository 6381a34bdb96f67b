#include "rkcs/tour.hpp"

#include "rkcs/error.hpp"

#include <algorithm>
#include <limits>

namespace rkcs {

namespace {

Length cycle_length(DistanceView d, std::span<const City> order) noexcept {
    Length total = d(order.back(), order.front());
    for (std::size_t p = 0; p + 1 < order.size(); ++p) total += d(order[p], order[p + 1]);
    return total;
}

void check_move(std::size_t i, std::size_t k, std::size_t m) {
    RKCS_EXPECTS(i < k && k < m, "2-opt move requires 0 <= i < k < m");
}

}  // namespace

bool is_permutation_of(std::span<const City> order, std::size_t m) noexcept {
    if (order.size() != m) return false;
    std::vector<bool> seen(m, false);
    for (const City c : order) {
        if (c < 0 || static_cast<std::size_t>(c) >= m || seen[static_cast<std::size_t>(c)]) return false;
        seen[static_cast<std::size_t>(c)] = true;
    }
    return true;
}

Length tour_cost(const Instance& inst, std::span<const City> order) {
    RKCS_EXPECTS(is_permutation_of(order, inst.dimension()), "order is not a permutation of the instance's cities");
    return cycle_length(inst.distances(), order);
}

Tour::Tour(const Instance& inst, std::vector<City> order)
    : instance_(&inst), order_(std::move(order)), cost_(tour_cost(inst, order_)) {}

std::vector<City> two_opt_apply(std::span<const City> order, std::size_t i, std::size_t k) {
    check_move(i, k, order.size());
    std::vector<City> out(order.begin(), order.end());
    std::reverse(out.begin() + static_cast<std::ptrdiff_t>(i + 1), out.begin() + static_cast<std::ptrdiff_t>(k + 1));
    return out;
}

Length two_opt_gain(const Instance& inst, std::span<const City> order, std::size_t i, std::size_t k) {
    const std::size_t m = order.size();
    RKCS_EXPECTS(m == inst.dimension(), "order length does not match the instance");
    check_move(i, k, m);
    const auto d = inst.distances();
    const City a = order[i];
    const City b = order[i + 1];
    const City c = order[k];
    const City e = order[(k + 1) % m];
    return d(a, b) + d(c, e) - d(a, c) - d(b, e);
}

namespace {

std::optional<TwoOptMove> scan_best(DistanceView d, std::span<const City> order) {
    const std::size_t m = order.size();
    TwoOptMove best;
    for (std::size_t i = 0; i + 2 < m; ++i) {
        const City a = order[i];
        const City b = order[i + 1];
        const std::int32_t* row_a = d.row(a);
        const std::int32_t* row_b = d.row(b);
        const Length dab = row_a[b];
        const std::size_t k_end = (i == 0) ? m - 1 : m;
        for (std::size_t k = i + 2; k < k_end; ++k) {
            const City c = order[k];
            const City e = (k + 1 == m) ? order[0] : order[k + 1];
            const Length gain = dab + d(c, e) - row_a[c] - row_b[e];
            // Strict '>' keeps the first (lowest i, then k) of equal-gain moves.
            if (gain > best.gain) best = {i, k, gain};
        }
    }
    if (best.gain <= 0) return std::nullopt;
    return best;
}

}  // namespace

std::optional<TwoOptMove> best_two_opt_move(const Instance& inst, std::span<const City> order) {
    RKCS_EXPECTS(is_permutation_of(order, inst.dimension()), "order is not a permutation of the instance's cities");
    return scan_best(inst.distances(), order);
}

std::size_t default_max_passes(const Instance& inst) noexcept { return 10 * inst.dimension(); }

Length steepest_descent_in_place(const Instance& inst, std::vector<City>& order, Length cost,
                                 std::size_t max_passes, std::size_t* passes) {
    const auto d = inst.distances();
    std::size_t done = 0;
    while (done < max_passes) {
        const auto move = scan_best(d, order);
        if (!move) break;
        std::reverse(order.begin() + static_cast<std::ptrdiff_t>(move->i + 1),
                     order.begin() + static_cast<std::ptrdiff_t>(move->k + 1));
        cost -= move->gain;
        ++done;
    }
    if (passes != nullptr) *passes = done;
    return cost;
}

DescentResult steepest_descent(const Instance& inst, Tour start, std::size_t max_passes) {
    RKCS_EXPECTS(&start.instance() == &inst, "tour belongs to a different instance");
    RKCS_EXPECTS(max_passes > 0, "max_passes must be positive");
    std::vector<City> order = std::move(start).release();
    std::size_t passes = 0;
    steepest_descent_in_place(inst, order, tour_cost(inst, order), max_passes, &passes);
    // The cap only binds if the last allowed pass still left an improving move.
    const bool optimum = passes < max_passes || !scan_best(inst.distances(), order);
    return {Tour(inst, std::move(order)), passes, optimum};
}

DescentResult steepest_descent(const Instance& inst, Tour start) {
    const std::size_t cap = default_max_passes(inst);
    return steepest_descent(inst, std::move(start), cap);
}

}  // namespace rkcs
