#pragma once

#include <cstdint>
#include <random>

namespace rkcs {

/// Random source used throughout. Each solver run owns one, seeded explicitly.
using Rng = std::mt19937_64;

}  // namespace rkcs
