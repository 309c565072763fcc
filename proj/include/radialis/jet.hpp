#pragma once

#include <cmath>
#include <string>

#include "radialis/errors.hpp"

namespace radialis {

/// Order-2 truncated Taylor data of a radial function at one radius:
/// the value together with exact first and second derivatives.
///
/// Arithmetic follows the Leibniz and quotient rules, composition the chain
/// rule, so derivatives propagate without symbolic algebra or finite
/// differencing. The jet of the identity map at r is (r, 1, 0).
struct Jet2 {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    static constexpr Jet2 constant(double c) { return {c, 0.0, 0.0}; }
    static constexpr Jet2 variable(double r) { return {r, 1.0, 0.0}; }

    bool finite() const {
        return std::isfinite(value) && std::isfinite(d1) && std::isfinite(d2);
    }
};

inline Jet2 operator-(const Jet2& a) { return {-a.value, -a.d1, -a.d2}; }

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2};
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2};
}
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.value * b.value,
            a.d1 * b.value + a.value * b.d1,
            a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2};
}
inline Jet2 operator/(const Jet2& a, const Jet2& b) {
    if (b.value == 0.0) {
        throw DomainError("jet division by a jet with zero value (denominator jet ("
                          + std::to_string(b.value) + ", " + std::to_string(b.d1) + ", "
                          + std::to_string(b.d2) + "))");
    }
    // Solve q*b = a channel by channel; avoids forming 1/b^3 terms.
    Jet2 q;
    q.value = a.value / b.value;
    q.d1 = (a.d1 - q.value * b.d1) / b.value;
    q.d2 = (a.d2 - 2.0 * q.d1 * b.d1 - q.value * b.d2) / b.value;
    return q;
}

inline Jet2 operator+(const Jet2& a, double c) { return {a.value + c, a.d1, a.d2}; }
inline Jet2 operator+(double c, const Jet2& a) { return a + c; }
inline Jet2 operator-(const Jet2& a, double c) { return {a.value - c, a.d1, a.d2}; }
inline Jet2 operator-(double c, const Jet2& a) { return {c - a.value, -a.d1, -a.d2}; }
inline Jet2 operator*(const Jet2& a, double c) { return {a.value * c, a.d1 * c, a.d2 * c}; }
inline Jet2 operator*(double c, const Jet2& a) { return a * c; }
inline Jet2 operator/(const Jet2& a, double c) { return {a.value / c, a.d1 / c, a.d2 / c}; }
inline Jet2 operator/(double c, const Jet2& a) { return Jet2::constant(c) / a; }

/// Chain rule for fn composed with a 2-jet, given fn, fn' and fn'' at a.value.
inline Jet2 jet_chain(double f, double fp, double fpp, const Jet2& a) {
    return {f, fp * a.d1, fpp * a.d1 * a.d1 + fp * a.d2};
}

inline Jet2 sin(const Jet2& a) {
    const double s = std::sin(a.value), c = std::cos(a.value);
    return jet_chain(s, c, -s, a);
}
inline Jet2 cos(const Jet2& a) {
    const double s = std::sin(a.value), c = std::cos(a.value);
    return jet_chain(c, -s, -c, a);
}
inline Jet2 sinh(const Jet2& a) {
    const double s = std::sinh(a.value), c = std::cosh(a.value);
    return jet_chain(s, c, s, a);
}
inline Jet2 cosh(const Jet2& a) {
    const double s = std::sinh(a.value), c = std::cosh(a.value);
    return jet_chain(c, s, c, a);
}
inline Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.value);
    return jet_chain(e, e, e, a);
}
inline Jet2 log(const Jet2& a) {
    if (a.value <= 0.0) {
        throw DomainError("jet log of non-positive value " + std::to_string(a.value));
    }
    const double inv = 1.0 / a.value;
    return jet_chain(std::log(a.value), inv, -inv * inv, a);
}

/// Integer powers by repeated multiplication: exact for polynomial jets.
inline Jet2 pow(const Jet2& a, int k) {
    if (k == 0) return Jet2::constant(1.0);
    if (k < 0) return Jet2::constant(1.0) / pow(a, -k);
    Jet2 acc = a;
    for (int i = 1; i < k; ++i) acc = acc * a;
    return acc;
}

/// Real powers: integer exponents go through the exact integer path,
/// everything else through exp(k*log a), which needs a.value > 0.
inline Jet2 pow(const Jet2& a, double k) {
    if (k == std::floor(k) && std::abs(k) <= 1e9) {
        return pow(a, static_cast<int>(k));
    }
    if (a.value <= 0.0) {
        throw DomainError("jet pow with non-integer exponent requires a positive base, got "
                          + std::to_string(a.value));
    }
    return exp(log(a) * k);
}

}  // namespace radialis
