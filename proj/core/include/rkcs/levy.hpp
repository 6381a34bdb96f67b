#pragma once

#include "rkcs/random_key.hpp"
#include "rkcs/rng.hpp"

#include <span>

namespace rkcs {

/// Step scaling `alpha` (> 0) and tail index `lambda` (in (0, 2]).
struct LevyParams {
    double alpha = 0.01;
    double lambda = 1.0;

    /// Throws ContractViolation if a field is out of range.
    void validate() const;
};

/// Mantegna's sigma_u for tail index lambda:
///   [Gamma(1+l) sin(pi l/2) / (Gamma((1+l)/2) l 2^((l-1)/2))]^(1/l)
[[nodiscard]] double mantegna_sigma(double lambda);

/// One signed heavy-tailed step, u / |v|^(1/lambda) with u ~ N(0, sigma_u^2),
/// v ~ N(0, 1). The magnitude density decays like s^-(1+lambda).
/// Not scaled by alpha.
[[nodiscard]] double levy_step(const LevyParams& params, Rng& rng);

/// Maps x to its positive fractional part, always in [0, 1).
[[nodiscard]] double wrap_unit(double x) noexcept;

/// Moves each selected agent: key <- wrap(key + alpha * levy_step).
/// `selected` must be non-empty, in range and free of duplicates.
/// Unselected keys are copied unchanged.
[[nodiscard]] KeyVector perturb_keys(const KeyVector& kv, std::span<const City> selected,
                                     const LevyParams& params, Rng& rng);

}  // namespace rkcs
