#pragma once

#include "rkcs/rng.hpp"
#include "rkcs/tour.hpp"
#include "rkcs/tsplib.hpp"

#include <span>
#include <vector>

namespace rkcs {

/// One real key per city ("agent"), each in [0, 1). Sorting cities by
/// ascending key gives the visiting order.
class KeyVector {
public:
    /// Throws ContractViolation if the vector is empty or a key lies outside [0, 1).
    explicit KeyVector(std::vector<double> keys);

    [[nodiscard]] std::span<const double> keys() const noexcept { return keys_; }
    [[nodiscard]] std::size_t size() const noexcept { return keys_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return keys_[i]; }

    friend bool operator==(const KeyVector&, const KeyVector&) = default;

private:
    std::vector<double> keys_;
};

/// Visiting order: cities sorted by ascending key; equal keys go lower index first.
[[nodiscard]] std::vector<City> decode(const KeyVector& kv);

/// Rank of each city (1-based) in the decoded order, e.g. {0.8, 0.5, 0.7, 0.1,
/// 0.4, 0.2} -> {6, 4, 5, 1, 3, 2}.
[[nodiscard]] std::vector<std::size_t> decode_ranks(const KeyVector& kv);

/// m independent uniform draws on [0, 1).
[[nodiscard]] KeyVector random_key_vector(std::size_t m, Rng& rng);

/// Reassigns the same multiset of key values so that decode(result) == order:
/// the city at visiting position p receives the p-th smallest key.
[[nodiscard]] KeyVector align_keys(const KeyVector& kv, std::span<const City> order);

/// A population member: key vector plus the tour it decodes to.
struct Nest {
    KeyVector keys;
    Tour tour;

    [[nodiscard]] Length fitness() const noexcept { return tour.cost(); }
};

/// n random nests for `inst`, decoded and evaluated, with no improvement step.
[[nodiscard]] std::vector<Nest> initial_population(const Instance& inst, std::size_t n, Rng& rng);

}  // namespace rkcs
