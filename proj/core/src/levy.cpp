#include "rkcs/levy.hpp"

#include "rkcs/error.hpp"

#include <cmath>
#include <numbers>

namespace rkcs {

void LevyParams::validate() const {
    RKCS_EXPECTS(alpha > 0.0 && std::isfinite(alpha), "alpha must be positive");
    RKCS_EXPECTS(lambda > 0.0 && lambda <= 2.0, "lambda must lie in (0, 2]");
}

double mantegna_sigma(double lambda) {
    RKCS_EXPECTS(lambda > 0.0 && lambda <= 2.0, "lambda must lie in (0, 2]");
    const double num = std::tgamma(1.0 + lambda) * std::sin(std::numbers::pi * lambda / 2.0);
    const double den = std::tgamma((1.0 + lambda) / 2.0) * lambda * std::pow(2.0, (lambda - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / lambda);
}

double levy_step(const LevyParams& params, Rng& rng) {
    params.validate();
    std::normal_distribution<double> u_dist(0.0, mantegna_sigma(params.lambda));
    std::normal_distribution<double> v_dist(0.0, 1.0);
    const double u = u_dist(rng);
    double v = 0.0;
    do {
        v = v_dist(rng);
    } while (v == 0.0);
    return u / std::pow(std::abs(v), 1.0 / params.lambda);
}

double wrap_unit(double x) noexcept {
    if (!std::isfinite(x)) return 0.0;
    double r = x - std::floor(x);
    // Tiny negative inputs round up to exactly 1.0.
    if (r >= 1.0) r = 0.0;
    return r;
}

KeyVector perturb_keys(const KeyVector& kv, std::span<const City> selected, const LevyParams& params, Rng& rng) {
    RKCS_EXPECTS(!selected.empty(), "selection must not be empty");
    const std::size_t m = kv.size();
    std::vector<bool> hit(m, false);
    for (const City c : selected) {
        RKCS_EXPECTS(c >= 0 && static_cast<std::size_t>(c) < m, "selected agent out of range");
        RKCS_EXPECTS(!hit[static_cast<std::size_t>(c)], "selected agents must be distinct");
        hit[static_cast<std::size_t>(c)] = true;
    }
    std::vector<double> keys(kv.keys().begin(), kv.keys().end());
    for (const City c : selected) {
        auto& k = keys[static_cast<std::size_t>(c)];
        k = wrap_unit(k + params.alpha * levy_step(params, rng));
    }
    return KeyVector(std::move(keys));
}

}  // namespace rkcs
