#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>

#include "laspa/errors.hpp"
#include "laspa/laguerre.hpp"
#include "laspa/polynomial.hpp"

namespace laspa {

struct SpaOptions {
    int order = 8;             // power-sum order M
    int max_shifts = 40;       // shift budget before SeedingFailed
    double perturbation = 1e-3; // relative nudge on degenerate configurations
};

/// Seed point together with the index of the disk that contains it.
struct SeedResult {
    Complex point;
    std::size_t disk_index;
};

/// Estimate of the root of p nearest to the shift point a, from the power
/// sums s_m = sum_j (rho_j - a)^(-m): the nearest root's term dominates as
/// m grows, so s_{M-1}/s_M tends to rho_near - a and
///
///     estimate = a + s_{M-1}/s_M.
///
/// The error shrinks geometrically in M with ratio |rho_near - a| /
/// |rho_second - a|. Equidistant configurations leave the ratio directionless
/// (s_{M-1} or s_M collapses); those raise DegenerateSums so the caller can
/// perturb a rather than consume a meaningless estimate.
inline Complex nearest_root_estimate(const Polynomial& p, Complex a, int order) {
    if (order < 2)
        throw std::invalid_argument("nearest_root_estimate: order must be at least 2");
    const PowerSums ps = reciprocal_power_sums(taylor_shift(p, a), order);
    const Complex sm = ps.sums[static_cast<std::size_t>(order - 1)];
    const Complex sm1 = ps.sums[static_cast<std::size_t>(order - 2)];
    if (std::abs(sm) < 1e-300 || std::abs(sm1) <= 1e-15 * std::abs(sm))
        throw DegenerateSums();
    const Complex estimate = a + sm1 / sm;
    if (!is_finite(estimate))
        throw DegenerateSums();
    return estimate;
}

namespace detail {

/// Unit direction for the k-th deterministic perturbation: golden-angle
/// rotation, so no two nudges within a budget share a direction and no
/// root configuration's symmetry axis can trap every nudge.
inline Complex perturbation_direction(int k) {
    constexpr double golden = 0.6180339887498949;
    const double turns = static_cast<double>(k + 1) * golden;
    const double angle = 2.0 * std::numbers::pi * (turns - std::floor(turns));
    return std::polar(1.0, angle);
}

} // namespace detail

/// Shift iteration: a_{k+1} = nearest_root_estimate(p, a_k) from a_0 = start
/// until an estimate lands inside one of the disks; returns that point and
/// the disk's index. Degenerate configurations get a deterministic relative
/// nudge; every tenth round the shift additionally gets a scaled-up kick so
/// a stalled fixed point (estimate cycling outside every disk) cannot eat
/// the whole budget. All perturbations are pure functions of the round
/// index, so identical inputs reproduce identical seeds.
inline SeedResult spa_seed(const Polynomial& p, std::span<const ConvergenceDisk> disks,
                           Complex start, const SpaOptions& opts = {}) {
    if (disks.empty())
        throw std::invalid_argument("spa_seed: need at least one disk");
    Complex a = start;
    for (int k = 0; k < opts.max_shifts; ++k) {
        bool kicked = false;
        if (k > 0 && k % 10 == 0) {
            a += opts.perturbation * std::pow(10.0, static_cast<double>(k / 10)) *
                 detail::perturbation_direction(k) * std::max(1.0, std::abs(a));
            kicked = true;
        }
        Complex estimate;
        try {
            estimate = nearest_root_estimate(p, a, opts.order);
        } catch (const Error&) { // RootAtShiftPoint or DegenerateSums
            if (!kicked)
                a += opts.perturbation * detail::perturbation_direction(k) *
                     std::max(1.0, std::abs(a));
            continue;
        }
        for (std::size_t d = 0; d < disks.size(); ++d)
            if (std::abs(estimate - disks[d].center) < disks[d].radius * (1.0 - 1e-12))
                return {estimate, d};
        a = estimate;
    }
    throw SeedingFailed(a);
}

} // namespace laspa
