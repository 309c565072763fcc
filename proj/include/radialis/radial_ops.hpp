#pragma once

#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radialis/errors.hpp"
#include "radialis/jet.hpp"
#include "radialis/model_space.hpp"
#include "radialis/radial_function.hpp"

namespace radialis {

/// Mean curvature H(r) = Theta'(r)/Theta(r) of the geodesic sphere of
/// radius r, read off the density jet.
inline double mean_curvature(const ModelSpace& space, double r) {
    const Jet2 theta = space.density(r);
    return theta.d1 / theta.value;
}

/// Radial Laplacian of f at radius r: f'' + H(r) f'.
inline double radial_laplacian(const ModelSpace& space, const RadialFunction& f, double r) {
    const Jet2 j = f(r);
    return j.d2 + mean_curvature(space, r) * j.d1;
}

/// The assertion that f is an eigenfunction on a given space, in the sign
/// convention Delta f = lambda f + constant. The constant term carries the
/// one affine case Delta r^2 = 2n; it is zero for genuine eigenclaims.
struct EigenClaim {
    ModelSpace space;
    RadialFunction f;
    double lambda = 0.0;
    double constant = 0.0;
    std::string id;
};

/// Max over the grid of |Delta f - lambda f - constant|.
inline double eigen_residual(const EigenClaim& claim, std::span<const double> grid) {
    if (grid.empty()) {
        throw ValidationError("eigen_residual requires a nonempty grid");
    }
    double worst = 0.0;
    for (double r : grid) {
        const Jet2 j = claim.f(r);
        const double lap = j.d2 + mean_curvature(claim.space, r) * j.d1;
        worst = std::max(worst, std::abs(lap - claim.lambda * j.value - claim.constant));
    }
    return worst;
}

/// Inverts Delta f = lambda f + constant for the mean curvature:
/// H(r) = (lambda f + constant - f'') / f'. This is the H any harmonic
/// manifold must exhibit if the claim holds there.
inline double recover_mean_curvature(const RadialFunction& f, double lambda, double r,
                                     double constant = 0.0, double critical_tol = 1e-12) {
    const Jet2 j = f(r);
    if (std::abs(j.d1) < critical_tol) {
        throw CriticalPointError("'" + f.label + "' has |f'| = " + std::to_string(std::abs(j.d1))
                                     + " below threshold at r=" + std::to_string(r),
                                 r);
    }
    return (lambda * j.value + constant - j.d2) / j.d1;
}

inline std::vector<std::string> known_claim_ids() {
    return {"r2", "r2mn", "cos", "cosh", "sinh2"};
}

/// Builds a named claim against an arbitrary space, so failing combinations
/// (e.g. the cosh claim on a sphere) can be scored too. The eigenvalue is the
/// one the claim's defining equation assigns for the space's parameter:
///   r2    : f = r^2,      Delta f = 2d          (affine, lambda = 0)
///   r2mn  : f = r^{2-d},  Delta f = 0
///   cos   : f = cos r,    Delta f = -n f
///   cosh  : f = cosh r,   Delta f = +n f
///   sinh2 : f = 1 + ((n+1)/n) sinh^2 r, Delta f = 4(n+1) f  (8(n+1) on QH^n)
inline EigenClaim make_claim(const ModelSpace& space, std::string_view id) {
    if (id == "r2") {
        return {space, radial_power(2), 0.0, 2.0 * space.dim, "r2"};
    }
    if (id == "r2mn") {
        return {space, radial_power(2 - space.dim), 0.0, 0.0, "r2mn"};
    }
    if (id == "cos") {
        return {space, radial_cos(), -static_cast<double>(space.n), 0.0, "cos"};
    }
    if (id == "cosh") {
        return {space, radial_cosh(), static_cast<double>(space.n), 0.0, "cosh"};
    }
    if (id == "sinh2") {
        const double lam = space.family == SpaceFamily::QuaternionicHyperbolic
                               ? 8.0 * (space.n + 1)
                               : 4.0 * (space.n + 1);
        return {space, radial_sinh_squared_eigenfunction(space.n), lam, 0.0, "sinh2"};
    }
    throw ValidationError("unknown claim id '" + std::string(id) + "'");
}

/// The claims each catalog family actually satisfies.
inline std::vector<EigenClaim> native_claims(const ModelSpace& space) {
    switch (space.family) {
        case SpaceFamily::Euclidean:
            return {make_claim(space, "r2"), make_claim(space, "r2mn")};
        case SpaceFamily::Sphere:
            return {make_claim(space, "cos")};
        case SpaceFamily::Hyperbolic:
            return {make_claim(space, "cosh")};
        case SpaceFamily::ComplexHyperbolic:
        case SpaceFamily::QuaternionicHyperbolic:
            return {make_claim(space, "sinh2")};
    }
    throw ValidationError("unknown space family");
}

}  // namespace radialis
