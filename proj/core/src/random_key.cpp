#include "rkcs/random_key.hpp"

#include "rkcs/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rkcs {

KeyVector::KeyVector(std::vector<double> keys) : keys_(std::move(keys)) {
    RKCS_EXPECTS(!keys_.empty(), "key vector must not be empty");
    for (const double k : keys_) RKCS_EXPECTS(k >= 0.0 && k < 1.0, "keys must lie in [0, 1)");
}

std::vector<City> decode(const KeyVector& kv) {
    const auto keys = kv.keys();
    std::vector<City> order(keys.size());
    std::iota(order.begin(), order.end(), City{0});
    std::stable_sort(order.begin(), order.end(), [&](City a, City b) {
        return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
    });
    return order;
}

std::vector<std::size_t> decode_ranks(const KeyVector& kv) {
    const auto order = decode(kv);
    std::vector<std::size_t> ranks(order.size());
    for (std::size_t p = 0; p < order.size(); ++p) ranks[static_cast<std::size_t>(order[p])] = p + 1;
    return ranks;
}

KeyVector random_key_vector(std::size_t m, Rng& rng) {
    RKCS_EXPECTS(m >= 1, "need at least one key");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> keys(m);
    for (auto& k : keys) {
        // uniform_real_distribution may return 1.0 through rounding.
        do {
            k = unit(rng);
        } while (k >= 1.0);
    }
    return KeyVector(std::move(keys));
}

KeyVector align_keys(const KeyVector& kv, std::span<const City> order) {
    RKCS_EXPECTS(is_permutation_of(order, kv.size()), "order is not a permutation matching the key vector");
    std::vector<double> sorted(kv.keys().begin(), kv.keys().end());
    std::sort(sorted.begin(), sorted.end());
    // Duplicate keys would let the index tie-break reorder cities; separate them.
    for (std::size_t p = 1; p < sorted.size(); ++p) {
        if (sorted[p] <= sorted[p - 1]) {
            const double next = std::nextafter(sorted[p - 1], 1.0);
            if (next < 1.0) sorted[p] = next;
        }
    }
    std::vector<double> keys(sorted.size());
    for (std::size_t p = 0; p < order.size(); ++p) keys[static_cast<std::size_t>(order[p])] = sorted[p];
    return KeyVector(std::move(keys));
}

std::vector<Nest> initial_population(const Instance& inst, std::size_t n, Rng& rng) {
    RKCS_EXPECTS(n >= 1, "population size must be positive");
    std::vector<Nest> nests;
    nests.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        KeyVector keys = random_key_vector(inst.dimension(), rng);
        Tour tour(inst, decode(keys));
        nests.push_back({std::move(keys), std::move(tour)});
    }
    return nests;
}

}  // namespace rkcs
