#pragma once

// Shared test machinery: deterministic random suites, optimal-ish root
// pairing, an independent companion-matrix eigenvalue oracle, byte hashing.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "laspa/polynomial.hpp"

namespace support {

/// mt19937_64 with an explicit [0,1) mapping so streams are identical on
/// every platform (uniform_real_distribution's output is not portable).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    laspa::Complex box(double half_side) {
        const double re = uniform(-half_side, half_side);
        return {re, uniform(-half_side, half_side)};
    }

  private:
    std::mt19937_64 engine_;
};

/// Rejection-sample n roots with pairwise distance >= min_sep inside the
/// square of half-side max_mag. Keeps suite polynomials well conditioned:
/// all roots simple with sizeable convergence disks.
inline std::vector<laspa::Complex> separated_roots(Rng& rng, int n, double min_sep = 0.5,
                                                   double max_mag = 3.0) {
    std::vector<laspa::Complex> roots;
    while (static_cast<int>(roots.size()) < n) {
        const laspa::Complex candidate = rng.box(max_mag);
        bool ok = true;
        for (const laspa::Complex& r : roots)
            if (std::abs(candidate - r) < min_sep) {
                ok = false;
                break;
            }
        if (ok)
            roots.push_back(candidate);
    }
    return roots;
}

struct SuiteEntry {
    std::vector<laspa::Complex> roots;
    laspa::Polynomial poly;
};

/// Deterministic suite of simple-root polynomials, degrees cycling 4..8.
inline std::vector<SuiteEntry> random_suite(int count, std::uint64_t seed = 20150901) {
    Rng rng(seed);
    std::vector<SuiteEntry> suite;
    suite.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const int degree = 4 + i % 5;
        std::vector<laspa::Complex> roots = separated_roots(rng, degree);
        laspa::Polynomial poly = laspa::from_roots(roots);
        suite.push_back({std::move(roots), std::move(poly)});
    }
    return suite;
}

/// Greedy closest-first matching between two equal-size sets; returns the
/// largest matched distance. For well-separated targets this agrees with
/// the optimal assignment.
inline double pairing_distance(std::vector<laspa::Complex> truth,
                               std::vector<laspa::Complex> found) {
    double worst = 0.0;
    while (!truth.empty()) {
        std::size_t bi = 0, bj = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < truth.size(); ++i)
            for (std::size_t j = 0; j < found.size(); ++j)
                if (std::abs(truth[i] - found[j]) < best) {
                    best = std::abs(truth[i] - found[j]);
                    bi = i;
                    bj = j;
                }
        worst = std::max(worst, best);
        truth.erase(truth.begin() + static_cast<std::ptrdiff_t>(bi));
        found.erase(found.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    return worst;
}

/// FNV-1a, for pinning byte-exact golden outputs compactly.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

/// Independent rootfinding oracle: eigenvalues of the companion matrix.
inline std::vector<laspa::Complex> companion_roots(const laspa::Polynomial& p) {
    const int n = p.degree();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i)
        m(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i)
        m(i, n - 1) = -p[i] / p.leading();
    const Eigen::VectorXcd eig = m.eigenvalues();
    std::vector<laspa::Complex> roots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        roots[static_cast<std::size_t>(i)] = eig(i);
    return roots;
}

} // namespace support
