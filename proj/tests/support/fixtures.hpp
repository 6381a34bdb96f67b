#pragma once

#include "oracles.hpp"

#include <rkcs/rkcs.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace fixtures {

inline std::filesystem::path data_dir() { return RKCS_DATA_DIR; }

inline rkcs::Instance load(const std::string& name) { return rkcs::load_instance(data_dir() / (name + ".tsp")); }

inline rkcs::Instance to_instance(const std::vector<oracle::Pt>& pts, std::string name = "random") {
    std::vector<rkcs::Point> coords;
    for (const auto& p : pts) coords.push_back({p.x, p.y});
    return rkcs::Instance(std::move(name), std::move(coords));
}

inline std::vector<oracle::Pt> to_points(const rkcs::Instance& inst) {
    std::vector<oracle::Pt> pts;
    for (const auto& p : inst.coords()) pts.push_back({p.x, p.y});
    return pts;
}

inline std::vector<int> to_ints(std::span<const rkcs::City> order) { return {order.begin(), order.end()}; }

inline std::vector<rkcs::City> random_order(std::size_t m, std::mt19937_64& rng) {
    std::vector<rkcs::City> order(m);
    std::iota(order.begin(), order.end(), rkcs::City{0});
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

/// (0,0), (0,s), (s,s), (s,0)
inline rkcs::Instance square(double side) {
    return rkcs::Instance("square", {{0, 0}, {0, side}, {side, side}, {side, 0}});
}

}  // namespace fixtures
