#pragma once

#include "rkcs/bench.hpp"
#include "rkcs/error.hpp"
#include "rkcs/levy.hpp"
#include "rkcs/random_key.hpp"
#include "rkcs/report.hpp"
#include "rkcs/rng.hpp"
#include "rkcs/solver.hpp"
#include "rkcs/tour.hpp"
#include "rkcs/tsplib.hpp"
