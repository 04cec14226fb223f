#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "laspa/errors.hpp"
#include "laspa/polynomial.hpp"

namespace laspa {

/// A polynomial given by its roots instead of coefficients. Roots must be
/// pairwise distinct; multiplicity is not representable here.
class RootSet {
  public:
    explicit RootSet(std::vector<Complex> roots) : roots_(std::move(roots)) {
        if (roots_.size() < 2)
            throw DegreeTooLow(static_cast<int>(roots_.size()), 2);
        for (const Complex& r : roots_)
            if (!is_finite(r))
                throw std::invalid_argument("RootSet: roots must be finite");
        for (std::size_t i = 0; i < roots_.size(); ++i)
            for (std::size_t j = i + 1; j < roots_.size(); ++j)
                if (roots_[i] == roots_[j])
                    throw std::invalid_argument("RootSet: roots must be pairwise distinct");
    }

    int degree() const { return static_cast<int>(roots_.size()); }
    const std::vector<Complex>& roots() const { return roots_; }

  private:
    std::vector<Complex> roots_;
};

/// S1 = sum 1/(z - rho_j) and S2 = sum 1/(z - rho_j)^2. These are
/// p'/p and (p'/p)^2 - p''/p for the monic polynomial with those roots.
struct SumPair {
    Complex s1;
    Complex s2;
};

inline SumPair sums_at(const RootSet& rs, Complex z) {
    SumPair out{0.0, 0.0};
    for (const Complex& r : rs.roots()) {
        const Complex d = z - r;
        if (std::abs(d) == 0.0)
            throw PoleAtRoot();
        const Complex inv = 1.0 / d;
        out.s1 += inv;
        out.s2 += inv * inv;
    }
    return out;
}

/// Laguerre step driven by the root sums instead of polynomial values:
///
///     z' = z - n / (S1 +- sqrt((n-1)(n S2 - S1^2))).
///
/// Substituting S1 = p'/p, S2 = (p'/p)^2 - p''/p shows the two candidate
/// steps coincide with those of the coefficient form, so the same selection
/// rule applies: principal square root, sign maximizing the denominator
/// magnitude, ties to the + candidate.
inline Complex laguerre_step_from_roots(const RootSet& rs, Complex z) {
    const double n = static_cast<double>(rs.degree());
    const SumPair s = sums_at(rs, z);
    const Complex w = std::sqrt((n - 1.0) * (n * s.s2 - s.s1 * s.s1));
    const Complex dplus = s.s1 + w;
    const Complex dminus = s.s1 - w;
    const Complex den = std::abs(dplus) >= std::abs(dminus) ? dplus : dminus;
    if (std::abs(den) == 0.0)
        throw SingularStep();
    const Complex next = z - n / den;
    if (!is_finite(next))
        throw SingularStep();
    return next;
}

} // namespace laspa
