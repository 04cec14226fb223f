#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "laspa/errors.hpp"

namespace laspa {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Complex polynomial c_0 + c_1 z + ... + c_n z^n, stored in ascending
/// powers. Degree is at least 1 and the leading coefficient is nonzero;
/// both are enforced at construction.
class Polynomial {
  public:
    explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() < 2)
            throw std::invalid_argument("polynomial needs degree >= 1 (at least two coefficients)");
        for (const Complex& c : coeffs_)
            if (!is_finite(c))
                throw std::invalid_argument("polynomial coefficients must be finite");
        if (std::abs(coeffs_.back()) == 0.0)
            throw ZeroLeadingCoefficient();
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    const Complex& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    Complex leading() const { return coeffs_.back(); }

  private:
    std::vector<Complex> coeffs_;
};

/// p, p' and p'' at one point.
struct EvalTriple {
    Complex value;
    Complex d1;
    Complex d2;
};

/// Power sums of reciprocal shifted roots: sums[m-1] = sum_j (rho_j - shift)^(-m).
struct PowerSums {
    std::vector<Complex> sums;
    Complex shift;
    int order;
};

/// One second-order Horner pass: p(z), p'(z), p''(z).
inline EvalTriple eval_triple(const Polynomial& p, Complex z) {
    const int n = p.degree();
    Complex b = p[n];
    Complex d = 0.0;
    Complex f = 0.0;
    for (int j = n - 1; j >= 0; --j) {
        f = z * f + d;
        d = z * d + b;
        b = z * b + p[j];
    }
    return {b, d, 2.0 * f};
}

/// Magnitude scale of the Horner evaluation of p at z: sum |c_j| max(1,|z|)^j.
/// Residuals are judged relative to this.
inline double eval_scale(const Polynomial& p, Complex z) {
    const double az = std::max(1.0, std::abs(z));
    double s = 0.0;
    double pw = 1.0;
    for (const Complex& c : p.coeffs()) {
        s += std::abs(c) * pw;
        pw *= az;
    }
    return s;
}

/// |p(z)| relative to the evaluation scale at z.
inline double relative_residual(const Polynomial& p, Complex z) {
    return std::abs(eval_triple(p, z).value) / eval_scale(p, z);
}

/// Expand leading * prod_j (z - roots[j]) by repeated linear multiplication
/// in index order.
inline Polynomial from_roots(const std::vector<Complex>& roots, Complex leading = 1.0) {
    if (roots.empty())
        throw EmptyRootList();
    if (std::abs(leading) == 0.0)
        throw ZeroLeadingCoefficient();
    std::vector<Complex> c{leading};
    for (const Complex& r : roots) {
        c.insert(c.begin(), 0.0);
        for (std::size_t k = 0; k + 1 < c.size(); ++k)
            c[k] -= r * c[k + 1];
    }
    return Polynomial(std::move(c));
}

/// Synthetic division quotient p(z)/(z - root); the remainder p(root) is
/// dropped. Degree must be at least 2 so the quotient is a valid polynomial.
inline Polynomial deflate(const Polynomial& p, Complex root) {
    const int n = p.degree();
    if (n < 2)
        throw DegreeTooLow(n, 2);
    std::vector<Complex> q(static_cast<std::size_t>(n));
    q[static_cast<std::size_t>(n - 1)] = p[n];
    for (int k = n - 2; k >= 0; --k)
        q[static_cast<std::size_t>(k)] = p[k + 1] + root * q[static_cast<std::size_t>(k + 1)];
    return Polynomial(std::move(q));
}

/// Coefficients of p(z + a), via repeated Horner-style synthetic division.
inline Polynomial taylor_shift(const Polynomial& p, Complex a) {
    std::vector<Complex> b = p.coeffs();
    const int n = p.degree();
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j)
            b[static_cast<std::size_t>(j)] += a * b[static_cast<std::size_t>(j + 1)];
    return Polynomial(std::move(b));
}

/// Power sums s_m = sum_j rho_j^(-m), m = 1..order, of the roots of p,
/// without knowing the roots: Newton's identities applied to the reversed
/// polynomial made monic (its roots are the reciprocals 1/rho_j).
/// Requires p(0) != 0. Compose with taylor_shift for sums of
/// (rho_j - a)^(-m); the shift field of the result is 0.
inline PowerSums reciprocal_power_sums(const Polynomial& p, int order) {
    if (order < 1)
        throw std::invalid_argument("power sum order must be >= 1");
    const int n = p.degree();
    if (std::abs(p[0]) == 0.0)
        throw RootAtShiftPoint();
    // e_i of the monic reversed polynomial: e_i = (-1)^i c_i / c_0.
    std::vector<Complex> e(static_cast<std::size_t>(n) + 1);
    double sign = -1.0;
    for (int i = 1; i <= n; ++i) {
        e[static_cast<std::size_t>(i)] = sign * p[i] / p[0];
        sign = -sign;
    }
    std::vector<Complex> s(static_cast<std::size_t>(order));
    for (int m = 1; m <= order; ++m) {
        Complex acc = 0.0;
        double esign = 1.0;
        const int top = std::min(m - 1, n);
        for (int i = 1; i <= top; ++i) {
            acc += esign * e[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(m - i - 1)];
            esign = -esign;
        }
        if (m <= n)
            acc += (m % 2 == 0 ? -1.0 : 1.0) * static_cast<double>(m) * e[static_cast<std::size_t>(m)];
        s[static_cast<std::size_t>(m - 1)] = acc;
    }
    return {std::move(s), 0.0, order};
}

} // namespace laspa
