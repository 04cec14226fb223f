#pragma once

// Umbrella header: certified polynomial rootfinding (Laguerre iteration with
// guaranteed-convergence disks, power-sum seeding, basin rendering).

#include "laspa/basins.hpp"
#include "laspa/cli.hpp"
#include "laspa/errors.hpp"
#include "laspa/laguerre.hpp"
#include "laspa/polynomial.hpp"
#include "laspa/roots_iteration.hpp"
#include "laspa/solver.hpp"
#include "laspa/spa.hpp"
#include "laspa/text.hpp"
