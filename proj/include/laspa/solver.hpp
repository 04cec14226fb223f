#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "laspa/errors.hpp"
#include "laspa/laguerre.hpp"
#include "laspa/polynomial.hpp"
#include "laspa/spa.hpp"

namespace laspa {

/// Why a root failed certification; None means certified.
enum class CertifyFailure {
    None,
    DegreeTooLow,     // the disk construction needs degree > 3
    ResidualTooLarge, // refined value does not satisfy the polynomial well enough
    NotSimpleRoot,    // derivative vanishes to working accuracy
    DiskUnavailable,  // radius computation produced no usable disk
};

struct RootEstimate {
    Complex value;
    double residual; // relative, against the original polynomial
    bool certified;
    std::optional<ConvergenceDisk> disk;
    CertifyFailure failure = CertifyFailure::None;
};

struct SolveConfig {
    IterationOptions iteration;
    SpaOptions spa;
    int polish_steps = 2;
};

/// SeedingFailed variant thrown by find_all_roots: carries the roots that
/// were already located before the failing stage.
class SeedingFailedWithPartial : public SeedingFailed {
  public:
    SeedingFailedWithPartial(const SeedingFailed& cause, std::vector<RootEstimate> found)
        : SeedingFailed(cause), partial(std::move(found)) {}

    std::vector<RootEstimate> partial;
};

/// Post-hoc certificate for a claimed root of p: refine by one Laguerre
/// step, then require a small relative residual, a simple root, and a
/// usable convergence disk. Any failed check yields an uncertified estimate
/// with the reason recorded; nothing is thrown.
inline RootEstimate certify_root(const Polynomial& p, Complex estimate) {
    if (p.degree() < 4)
        return {estimate, relative_residual(p, estimate), false, std::nullopt,
                CertifyFailure::DegreeTooLow};
    Complex refined = estimate;
    try {
        refined = laguerre_step(p, estimate);
    } catch (const SingularStep&) {
        refined = estimate;
    }
    const double residual = relative_residual(p, refined);
    if (!(residual < 1e-10))
        return {refined, residual, false, std::nullopt, CertifyFailure::ResidualTooLarge};
    ConvergenceDisk disk{refined, 0.0};
    try {
        disk = convergence_radius(p, refined);
    } catch (const NotASimpleRoot&) {
        return {refined, residual, false, std::nullopt, CertifyFailure::NotSimpleRoot};
    }
    if (!(disk.radius > 0.0) || !std::isfinite(disk.radius))
        return {refined, residual, false, std::nullopt, CertifyFailure::DiskUnavailable};
    return {refined, residual, true, disk, CertifyFailure::None};
}

namespace detail {

inline bool converged(const IterationTrace& trace, const Polynomial& p) {
    if (trace.stop_reason == StopReason::ResidualBelowTolerance ||
        trace.stop_reason == StopReason::StepBelowTolerance)
        return true;
    return relative_residual(p, trace.final()) < 1e-8;
}

/// Approximate root of p (degree >= 2): one nearest-root estimate as a warm
/// start, Laguerre to convergence, deterministic restarts spread over the
/// Cauchy root disk if the iteration stalls or hits a singular step.
inline Complex approximate_root(const Polynomial& p, const IterationOptions& opts,
                                int spa_order) {
    Complex z0 = 0.0;
    try {
        z0 = nearest_root_estimate(p, 0.0, spa_order);
    } catch (const Error&) { // shift point is a root, or degenerate sums
        z0 = 0.0;
    }
    double cauchy = 0.0;
    for (int j = 0; j < p.degree(); ++j)
        cauchy = std::max(cauchy, std::abs(p[j]));
    cauchy = 1.0 + cauchy / std::abs(p.leading());
    Complex z = z0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        const IterationTrace trace = iterate_to_root(p, z, opts);
        if (trace.stop_reason != StopReason::SingularStep && converged(trace, p))
            return trace.final();
        if (trace.stop_reason == StopReason::SingularStep && attempt == 0) {
            const Complex zs = trace.final();
            z = zs + Complex(1e-3, 1e-3) * std::max(1.0, std::abs(zs));
        } else {
            z = 0.5 * static_cast<double>(attempt + 1) * cauchy *
                perturbation_direction(attempt);
        }
    }
    throw SeedingFailed(z);
}

/// One pipeline stage on a degree >= 4 polynomial: approximate a root,
/// certify its disk, seed into the disk, converge from the seed. When the
/// approximate root has no disk (not simple to working accuracy), it is
/// used directly; final certification against the original polynomial
/// decides what counts as certified.
inline Complex locate_root(const Polynomial& p, const SolveConfig& cfg) {
    const Complex anchor = approximate_root(p, cfg.iteration, cfg.spa.order);
    ConvergenceDisk disk{anchor, 0.0};
    try {
        disk = convergence_radius(p, anchor);
    } catch (const NotASimpleRoot&) {
        return anchor;
    }
    if (!(disk.radius > 0.0) || !std::isfinite(disk.radius))
        return anchor;
    const SeedResult seed = spa_seed(p, {&disk, 1}, anchor, cfg.spa);
    const IterationTrace trace = iterate_to_root(p, seed.point, cfg.iteration);
    if (trace.stop_reason != StopReason::SingularStep && converged(trace, p))
        return trace.final();
    return anchor;
}

/// polish_steps Laguerre refinement steps against the original polynomial;
/// converged values pass through unchanged (the step's residual floor).
inline Complex polish(const Polynomial& original, Complex z, int steps) {
    if (original.degree() < 2)
        return z;
    for (int s = 0; s < steps; ++s) {
        try {
            z = laguerre_step(original, z);
        } catch (const SingularStep&) {
            break;
        }
    }
    return z;
}

/// Both roots of a quadratic, via q = -(b + sign-matched sqrt(b^2-4ac))/2
/// and the product identity, avoiding cancellation in b + sqrt.
inline std::pair<Complex, Complex> quadratic_roots(const Polynomial& p) {
    const Complex a = p[2];
    const Complex b = p[1];
    const Complex c = p[0];
    Complex sq = std::sqrt(b * b - 4.0 * a * c);
    if (std::real(std::conj(b) * sq) < 0.0)
        sq = -sq;
    const Complex q = -0.5 * (b + sq);
    if (std::abs(q) == 0.0)
        return {0.0, 0.0}; // b = 0 and c = 0: double root at the origin
    return {q / a, c / q};
}

} // namespace detail

/// All roots of p: repeat locate/polish/deflate while the working degree
/// exceeds 3, then one uncertified iteration at degree 3, closed forms at
/// degrees 2 and 1. Every root is polished and certified against the
/// ORIGINAL polynomial, not the deflated one it was found on. Output is
/// sorted by (re, im); exactly degree(p) estimates are returned.
inline std::vector<RootEstimate> find_all_roots(const Polynomial& p,
                                                const SolveConfig& cfg = {}) {
    std::vector<Complex> values;
    values.reserve(static_cast<std::size_t>(p.degree()));

    auto classify = [&](const std::vector<Complex>& vs) {
        std::vector<RootEstimate> out;
        out.reserve(vs.size());
        for (const Complex& v : vs) {
            if (p.degree() >= 4)
                out.push_back(certify_root(p, v));
            else
                out.push_back({v, relative_residual(p, v), false, std::nullopt,
                               CertifyFailure::DegreeTooLow});
        }
        std::sort(out.begin(), out.end(), [](const RootEstimate& x, const RootEstimate& y) {
            if (std::real(x.value) != std::real(y.value))
                return std::real(x.value) < std::real(y.value);
            return std::imag(x.value) < std::imag(y.value);
        });
        return out;
    };

    Polynomial cur = p;
    try {
        while (cur.degree() >= 4) {
            const Complex found = detail::locate_root(cur, cfg);
            const Complex value = detail::polish(p, found, cfg.polish_steps);
            values.push_back(value);
            cur = deflate(cur, value);
        }
        if (cur.degree() == 3) {
            const Complex found =
                detail::approximate_root(cur, cfg.iteration, cfg.spa.order);
            const Complex value = detail::polish(p, found, cfg.polish_steps);
            values.push_back(value);
            cur = deflate(cur, value);
        }
    } catch (const SeedingFailed& failure) {
        throw SeedingFailedWithPartial(failure, classify(values));
    }
    if (cur.degree() == 2) {
        const auto [r1, r2] = detail::quadratic_roots(cur);
        values.push_back(detail::polish(p, r1, cfg.polish_steps));
        values.push_back(detail::polish(p, r2, cfg.polish_steps));
    } else {
        values.push_back(detail::polish(p, -cur[0] / cur[1], cfg.polish_steps));
    }
    return classify(values);
}

} // namespace laspa
