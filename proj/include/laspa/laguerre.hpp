#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <vector>

#include "laspa/errors.hpp"
#include "laspa/polynomial.hpp"

namespace laspa {

/// Open disk around a simple root from which the Laguerre iteration is
/// guaranteed to converge to that root.
struct ConvergenceDisk {
    Complex center;
    double radius;

    bool contains(Complex z) const { return std::abs(z - center) < radius; }
};

enum class StopReason {
    ResidualBelowTolerance,
    StepBelowTolerance,
    EnteredCertifiedDisk,
    MaxIterations,
    SingularStep,
};

struct IterationOptions {
    int max_iters = 80;
    double residual_tol = 1e-13; // relative to eval_scale
    double step_tol = 1e-14;     // relative to max(1, |z|)
};

struct IterationTrace {
    std::vector<Complex> iterates; // z_0, z_1, ...
    StopReason stop_reason;

    Complex final() const { return iterates.back(); }
    int steps() const { return static_cast<int>(iterates.size()) - 1; }
};

/// One Laguerre step z' = z - n p / (p' +- sqrt((n-1)((n-1)p'^2 - n p p''))).
/// The square root is the principal branch and the sign is chosen to
/// maximize the denominator magnitude, ties to the + candidate. A point
/// whose residual is already at the rounding floor is returned unchanged.
inline Complex laguerre_step(const Polynomial& p, Complex z) {
    const int n = p.degree();
    if (n < 2)
        throw DegreeTooLow(n, 2);
    const EvalTriple t = eval_triple(p, z);
    const double pv = std::abs(t.value);
    if (pv == 0.0 || pv <= std::numeric_limits<double>::epsilon() * eval_scale(p, z))
        return z;
    const double nn = static_cast<double>(n);
    const Complex w =
        std::sqrt((nn - 1.0) * ((nn - 1.0) * t.d1 * t.d1 - nn * t.value * t.d2));
    const Complex dplus = t.d1 + w;
    const Complex dminus = t.d1 - w;
    const Complex den = std::abs(dplus) >= std::abs(dminus) ? dplus : dminus;
    if (std::abs(den) == 0.0)
        throw SingularStep();
    const Complex next = z - nn * t.value / den;
    if (!is_finite(next))
        throw SingularStep();
    return next;
}

namespace detail {

/// max_{k>=2} |a_k / a_1|^(1/(k-1)) for the coefficients a_k of p(z + root);
/// a_1 = p'(root). Scales like an inverse distance: every other root of p
/// lies at distance >= 1/(2 gamma) from `root`.
inline double derivative_ratio_gamma(const Polynomial& shifted) {
    const int n = shifted.degree();
    const double a1 = std::abs(shifted[1]);
    double g = 0.0;
    for (int k = 2; k <= n; ++k) {
        const double ak = std::abs(shifted[k]);
        if (ak > 0.0)
            g = std::max(g, std::pow(ak / a1, 1.0 / static_cast<double>(k - 1)));
    }
    return g;
}

/// Scale of |p'| near z, mirroring eval_scale one derivative down.
inline double derivative_scale(const Polynomial& p, Complex z) {
    const double az = std::max(1.0, std::abs(z));
    double s = 0.0;
    double pw = 1.0;
    for (int j = 1; j <= p.degree(); ++j) {
        s += static_cast<double>(j) * std::abs(p[j]) * pw;
        pw *= az;
    }
    return s;
}

} // namespace detail

/// Guaranteed-convergence disk around a simple root of p (degree > 3).
///
/// Writing the step at z = root + e in terms of the root sums shows that the
/// relative denominator perturbation is governed by t/(d - t), where t = |e|
/// and d is the distance to the nearest other root: for
/// t <= d / (8n - 7) the maximizing sign always picks the branch aligned
/// with 1/e and the new error is below t / (2n - 1), so the disk maps into
/// itself and the iteration contracts to the root. The unknown d is bounded
/// below by 1/(2 gamma) with gamma = max_k |p^(k)/(k! p')|^(1/(k-1)) at the
/// root, which needs nothing but one Taylor shift. Combined radius:
///
///     r = 1 / (2 gamma (8n - 7)).
inline ConvergenceDisk convergence_radius(const Polynomial& p, Complex root) {
    const int n = p.degree();
    if (n < 4)
        throw DegreeTooLow(n, 4);
    const Polynomial shifted = taylor_shift(p, root);
    if (std::abs(shifted[1]) < 1e-8 * detail::derivative_scale(p, root))
        throw NotASimpleRoot();
    const double gamma = detail::derivative_ratio_gamma(shifted);
    const double radius = 1.0 / (2.0 * gamma * static_cast<double>(8 * n - 7));
    return {root, radius};
}

/// A priori lower bound for all convergence-disk radii of p, valid when all
/// roots are simple and computed from the coefficients alone.
///
/// The per-root radius is 1/(2 gamma (8n-7)), so it suffices to bound gamma
/// from above over all roots: numerators |p^(k)(rho)/k!| are bounded on the
/// Cauchy root disk |z| <= R, and |p'(rho)| is bounded below through the
/// resultant, |Res(p,p')| = |c_n|^(n-1) prod_i |p'(rho_i)|, by dividing out
/// the sup bound for the other n-1 factors. Everything is combined in log
/// space; the result is clamped to the smallest positive normal double so
/// the bound stays positive even when the resultant underflows.
inline double a_priori_radius_bound(const Polynomial& p) {
    const int n = p.degree();
    if (n < 4)
        throw DegreeTooLow(n, 4);

    // Cauchy bound: all roots satisfy |rho| <= R.
    double cmax = 0.0;
    for (int j = 0; j < n; ++j)
        cmax = std::max(cmax, std::abs(p[j]));
    const double R = 1.0 + cmax / std::abs(p[n]);

    // sup_{|z|<=R} |p'(z)| via the triangle inequality.
    double pmax = 0.0;
    {
        double pw = 1.0;
        for (int j = 1; j <= n; ++j) {
            pmax += static_cast<double>(j) * std::abs(p[j]) * pw;
            pw *= R;
        }
    }

    // log |Res(p, p')| from a partial-pivot LU of the Sylvester matrix.
    const int m = 2 * n - 1;
    std::vector<Complex> syl(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0.0);
    auto at = [&](int r, int c) -> Complex& {
        return syl[static_cast<std::size_t>(r) * static_cast<std::size_t>(m) +
                   static_cast<std::size_t>(c)];
    };
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j <= n; ++j)
            at(i, i + j) = p[n - j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            at(n - 1 + i, i + j) = static_cast<double>(n - j) * p[n - j];
    double log_res = 0.0;
    for (int col = 0; col < m; ++col) {
        int piv = col;
        double best = std::abs(at(col, col));
        for (int r = col + 1; r < m; ++r)
            if (std::abs(at(r, col)) > best) {
                best = std::abs(at(r, col));
                piv = r;
            }
        if (best == 0.0) {
            log_res = -std::numeric_limits<double>::infinity();
            break;
        }
        if (piv != col)
            for (int c = col; c < m; ++c)
                std::swap(at(piv, c), at(col, c));
        log_res += std::log(best);
        for (int r = col + 1; r < m; ++r) {
            const Complex f = at(r, col) / at(col, col);
            for (int c = col; c < m; ++c)
                at(r, c) -= f * at(col, c);
        }
    }

    const double log_prod_dp = log_res - static_cast<double>(n - 1) * std::log(std::abs(p[n]));
    const double log_dmin = log_prod_dp - static_cast<double>(n - 1) * std::log(pmax);

    // Upper bound on gamma over all roots.
    double log_gamma_max = -std::numeric_limits<double>::infinity();
    for (int k = 2; k <= n; ++k) {
        double nk = 0.0;
        double pw = 1.0;
        for (int j = k; j <= n; ++j) {
            double binom = 1.0;
            for (int i = 0; i < k; ++i)
                binom *= static_cast<double>(j - i) / static_cast<double>(k - i);
            nk += std::abs(p[j]) * binom * pw;
            pw *= R;
        }
        log_gamma_max =
            std::max(log_gamma_max, (std::log(nk) - log_dmin) / static_cast<double>(k - 1));
    }

    // Halve for rounding slack in the chain above, then clamp positive.
    const double log_b = -std::log(2.0) - std::log(static_cast<double>(8 * n - 7)) -
                         log_gamma_max + std::log(0.5);
    const double b = std::exp(log_b);
    if (!(b >= std::numeric_limits<double>::min()))
        return std::numeric_limits<double>::min();
    return b;
}

/// Laguerre iteration from z0 with relative residual/step stopping; when
/// certified disks are supplied, entering any of them (the start included)
/// also stops. SingularStep is reported as a stop reason, not thrown.
inline IterationTrace iterate_to_root(const Polynomial& p, Complex z0,
                                      const IterationOptions& opts = {},
                                      std::span<const ConvergenceDisk> disks = {}) {
    IterationTrace trace{{z0}, StopReason::MaxIterations};
    Complex z = z0;
    int steps = 0;
    for (;;) {
        if (relative_residual(p, z) <= opts.residual_tol) {
            trace.stop_reason = StopReason::ResidualBelowTolerance;
            return trace;
        }
        bool in_disk = false;
        for (const ConvergenceDisk& d : disks)
            if (d.contains(z)) {
                in_disk = true;
                break;
            }
        if (in_disk) {
            trace.stop_reason = StopReason::EnteredCertifiedDisk;
            return trace;
        }
        if (steps == opts.max_iters) {
            trace.stop_reason = StopReason::MaxIterations;
            return trace;
        }
        Complex next;
        try {
            next = laguerre_step(p, z);
        } catch (const SingularStep&) {
            trace.stop_reason = StopReason::SingularStep;
            return trace;
        }
        trace.iterates.push_back(next);
        ++steps;
        if (std::abs(next - z) <= opts.step_tol * std::max(1.0, std::abs(z))) {
            trace.stop_reason = StopReason::StepBelowTolerance;
            return trace;
        }
        z = next;
    }
}

} // namespace laspa
