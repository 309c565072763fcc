#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "radialis/errors.hpp"
#include "radialis/jet.hpp"
#include "radialis/model_space.hpp"

namespace radialis {

/// Scalar Jacobi solution s_K of y'' = -K y, y(0) = 0, y'(0) = 1, as a 2-jet:
///   sin(sqrt(K) r)/sqrt(K)    for K > 0 (up to the conjugate point pi/sqrt(K)),
///   r                         for K = 0,
///   sinh(sqrt(-K) r)/sqrt(-K) for K < 0.
inline Jet2 jacobi_solution(double K, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw DomainError("jacobi_solution requires r > 0, got r=" + std::to_string(r));
    }
    if (K > 0.0) {
        const double sq = std::sqrt(K);
        if (sq * r >= std::numbers::pi_v<double>) {
            throw ConjugatePointError("r=" + std::to_string(r)
                                      + " at or past the first conjugate point pi/sqrt(K)="
                                      + std::to_string(std::numbers::pi_v<double> / sq)
                                      + " for K=" + std::to_string(K));
        }
        return {std::sin(sq * r) / sq, std::cos(sq * r), -sq * std::sin(sq * r)};
    }
    if (K == 0.0) {
        return {r, 1.0, 0.0};
    }
    const double sq = std::sqrt(-K);
    return {std::sinh(sq * r) / sq, std::cosh(sq * r), sq * std::sinh(sq * r)};
}

/// Theta(r) rebuilt from the curvature spectrum as prod s_K(r)^mult.
/// Along a radial geodesic of a model space the Jacobi fields diagonalize,
/// so det<Y_i, Y_j> is a product of squares and its square root a plain
/// product.
inline Jet2 theta_from_spectrum(const CurvatureSpectrum& spectrum, double r) {
    spectrum.validate();
    Jet2 acc = Jet2::constant(1.0);
    for (const auto& e : spectrum.entries) {
        acc = acc * pow(jacobi_solution(e.curvature, r), e.multiplicity);
    }
    return acc;
}

/// Fixed-step classical 4th-order integration of y'' = -K y from 0 to r.
/// The actual step is r/N with N = ceil(r/step), so the global error is
/// O(step^4). Deterministic by construction.
inline double jacobi_integrate(double K, double r, double step) {
    if (!(r > 0.0) || !(step > 0.0)) {
        throw ValidationError("jacobi_integrate requires r > 0 and step > 0");
    }
    if (step > r / 10.0 * (1.0 + 1e-12)) {
        throw ValidationError("jacobi_integrate requires step <= r/10, got step="
                              + std::to_string(step) + " for r=" + std::to_string(r));
    }
    const long long n = static_cast<long long>(std::ceil(r / step - 1e-9));
    const double h = r / static_cast<double>(n);
    double y = 0.0, v = 1.0;
    for (long long i = 0; i < n; ++i) {
        const double k1y = v, k1v = -K * y;
        const double k2y = v + 0.5 * h * k1v, k2v = -K * (y + 0.5 * h * k1y);
        const double k3y = v + 0.5 * h * k2v, k3v = -K * (y + 0.5 * h * k2y);
        const double k4y = v + h * k3v, k4v = -K * (y + h * k3y);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    }
    return y;
}

struct PrincipalCurvature {
    double value = 0.0;
    int multiplicity = 0;
};

/// Principal curvatures s_K'(r)/s_K(r) of the geodesic sphere of radius r,
/// one per spectrum entry. Their multiplicity-weighted sum is the mean
/// curvature H(r).
inline std::vector<PrincipalCurvature> shape_eigenvalues(const CurvatureSpectrum& spectrum,
                                                         double r) {
    spectrum.validate();
    std::vector<PrincipalCurvature> out;
    out.reserve(spectrum.entries.size());
    for (const auto& e : spectrum.entries) {
        const Jet2 s = jacobi_solution(e.curvature, r);
        out.push_back({s.d1 / s.value, e.multiplicity});
    }
    return out;
}

}  // namespace radialis
