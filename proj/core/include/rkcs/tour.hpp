#pragma once

#include "rkcs/tsplib.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rkcs {

/// True when `order` holds every city 0..m-1 exactly once.
[[nodiscard]] bool is_permutation_of(std::span<const City> order, std::size_t m) noexcept;

/// Closed-cycle length: sum of consecutive edges plus the return edge.
/// Throws ContractViolation if `order` is not a permutation of the instance's cities.
[[nodiscard]] Length tour_cost(const Instance& inst, std::span<const City> order);

/// A visiting order together with its cached cost. The order is always a
/// valid permutation and the cost always matches it.
class Tour {
public:
    Tour(const Instance& inst, std::vector<City> order);

    [[nodiscard]] std::span<const City> order() const noexcept { return order_; }
    [[nodiscard]] Length cost() const noexcept { return cost_; }
    [[nodiscard]] std::size_t size() const noexcept { return order_.size(); }
    [[nodiscard]] const Instance& instance() const noexcept { return *instance_; }

    /// Moves the order out, leaving the tour empty.
    [[nodiscard]] std::vector<City> release() && noexcept { return std::move(order_); }

    friend bool operator==(const Tour& a, const Tour& b) noexcept {
        return a.instance_ == b.instance_ && a.cost_ == b.cost_ && a.order_ == b.order_;
    }

private:
    const Instance* instance_;
    std::vector<City> order_;
    Length cost_;
};

// --- 2-opt -----------------------------------------------------------------
//
// A move (i, k) with 0 <= i < k < m removes edges (order[i], order[i+1]) and
// (order[k], order[(k+1) % m]) and reconnects by reversing order[i+1..k].

/// Returns `order` with positions i+1..k reversed.
[[nodiscard]] std::vector<City> two_opt_apply(std::span<const City> order, std::size_t i, std::size_t k);

/// cost(order) - cost(after move), from the four affected edges. Positive
/// means the move shortens the tour.
[[nodiscard]] Length two_opt_gain(const Instance& inst, std::span<const City> order, std::size_t i,
                                  std::size_t k);

/// Whether (i, k) is part of the scanned neighborhood. Moves that cannot change
/// the cycle are excluded: k == i + 1 (reverses one city) and (0, m-1)
/// (reverses the whole cycle).
[[nodiscard]] constexpr bool is_scanned_move(std::size_t i, std::size_t k, std::size_t m) noexcept {
    return i + 2 <= k && k < m && !(i == 0 && k == m - 1);
}

struct TwoOptMove {
    std::size_t i = 0;
    std::size_t k = 0;
    Length gain = 0;
};

/// Best move of the full neighborhood, ties to the lexicographically lowest
/// (i, k). Returns nullopt when no move has strictly positive gain.
[[nodiscard]] std::optional<TwoOptMove> best_two_opt_move(const Instance& inst, std::span<const City> order);

struct DescentResult {
    Tour tour;
    std::size_t improving_passes = 0;
    bool local_optimum = false;  ///< false only when the pass cap stopped the search
};

/// Default pass cap: 10 * m.
[[nodiscard]] std::size_t default_max_passes(const Instance& inst) noexcept;

/// Best-improvement 2-opt descent. Each pass applies the single best strictly
/// improving move; the search stops at a 2-opt local optimum or after
/// `max_passes` improving passes.
[[nodiscard]] DescentResult steepest_descent(const Instance& inst, Tour start, std::size_t max_passes);
[[nodiscard]] DescentResult steepest_descent(const Instance& inst, Tour start);

/// In-place variant used by the solver: descends on `order`, returns the final
/// cost. `cost` must be the current cost of `order`.
Length steepest_descent_in_place(const Instance& inst, std::vector<City>& order, Length cost,
                                 std::size_t max_passes, std::size_t* passes = nullptr);

}  // namespace rkcs
