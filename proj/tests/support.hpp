#pragma once

// Test-only oracles, deliberately independent of the jet arithmetic and of
// the code paths they check.

#include <array>
#include <cmath>
#include <random>

#include "radialis/model_space.hpp"

namespace testsupport {

struct FdDerivatives {
    double d1 = 0.0;
    double d2 = 0.0;
};

// Richardson-extrapolated central differences on a plain value function.
// One extrapolation level from (h, 2h) takes the O(h^2) stencils to O(h^4);
// extrapolating upward keeps the second-difference roundoff floor at the
// base step's 4 eps |f| / h^2.
template <class F>
FdDerivatives fd_oracle(F&& value_at, double r, double h = 1e-4) {
    const auto d1_at = [&](double step) {
        return (value_at(r + step) - value_at(r - step)) / (2.0 * step);
    };
    const auto d2_at = [&](double step) {
        return (value_at(r + step) - 2.0 * value_at(r) + value_at(r - step)) / (step * step);
    };
    FdDerivatives out;
    out.d1 = (4.0 * d1_at(h) - d1_at(2.0 * h)) / 3.0;
    out.d2 = (4.0 * d2_at(h) - d2_at(2.0 * h)) / 3.0;
    return out;
}

// Truncated even Taylor series a0 + a2 r^2 + a4 r^4, enough to read off
// second derivatives at 0 of products of even factors.
struct EvenSeries {
    double a0 = 1.0;
    double a2 = 0.0;
    double a4 = 0.0;

    EvenSeries operator*(const EvenSeries& o) const {
        return {a0 * o.a0, a0 * o.a2 + a2 * o.a0, a0 * o.a4 + a2 * o.a2 + a4 * o.a0};
    }
    EvenSeries pow(int k) const {
        EvenSeries acc{1.0, 0.0, 0.0};
        for (int i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }
};

// Series of s_K(r)/r about 0: 1 - (K/6) r^2 + (K^2/120) r^4 + ...
inline EvenSeries jacobi_ratio_series(double K) {
    return {1.0, -K / 6.0, K * K / 120.0};
}

// omega''(0) for a curvature spectrum, straight from series multiplication.
inline double omega_second_derivative_series(const radialis::CurvatureSpectrum& spectrum) {
    EvenSeries acc{1.0, 0.0, 0.0};
    for (const auto& e : spectrum.entries) {
        acc = acc * jacobi_ratio_series(e.curvature).pow(e.multiplicity);
    }
    return 2.0 * acc.a2;
}

inline std::mt19937 seeded_rng(unsigned seed = 20240817u) { return std::mt19937(seed); }

inline std::vector<double> test_grid(double lo, double hi, int count) {
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i) {
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return g;
}

}  // namespace testsupport
