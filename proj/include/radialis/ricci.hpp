#pragma once

#include <cmath>
#include <string>

#include "radialis/errors.hpp"
#include "radialis/jacobi.hpp"
#include "radialis/model_space.hpp"

namespace radialis {

/// Ricci curvature at the center point by Ledger's formula, Ric = -3 omega''(0).
///
/// omega''(0) is taken from Richardson-extrapolated central differences on the
/// even extension omega(-r) = omega(r), base step 1e-2 and two extrapolation
/// levels, rather than from the analytic series: this exercises exactly the
/// computation a sampled density profile needs, with the closed forms serving
/// as oracle elsewhere.
inline double ledger_ricci(const ModelSpace& space) {
    const double h0 = 1e-2;
    const double omega0 = space.omega(0.0).value;
    // Even extension collapses the central second difference to
    // 2 (omega(h) - omega(0)) / h^2, with only even-order error terms.
    const auto second_difference = [&](double h) {
        return 2.0 * (space.omega(h).value - omega0) / (h * h);
    };
    const double d_h = second_difference(h0);
    const double d_h2 = second_difference(h0 / 2.0);
    const double d_h4 = second_difference(h0 / 4.0);
    const double level1_h = (4.0 * d_h2 - d_h) / 3.0;
    const double level1_h2 = (4.0 * d_h4 - d_h2) / 3.0;
    const double level2 = (16.0 * level1_h2 - level1_h) / 15.0;
    const double residual = std::abs(level2 - level1_h2);
    if (!(residual <= 1e-4)) {
        throw NumericalError("ledger_ricci extrapolation did not settle: residual "
                                 + std::to_string(residual),
                             residual);
    }
    return -3.0 * level2;
}

/// Ricci along radial geodesics from the Riccati equation for the shape
/// operator h of geodesic spheres: Ric = -tr h' - tr h^2, with both traces
/// taken from exact jet derivatives of the principal curvatures. Constant in
/// r on every model space.
inline double riccati_ricci(const ModelSpace& space, double r) {
    if (!(r > 0.0) || !(r < space.r_max)) {
        throw DomainError("riccati_ricci requires 0 < r < r_max, got r=" + std::to_string(r));
    }
    double tr_hprime = 0.0;
    double tr_hsq = 0.0;
    for (const auto& e : space.spectrum.entries) {
        const Jet2 s = jacobi_solution(e.curvature, r);
        const double lam = s.d1 / s.value;                 // principal curvature
        const double lam_prime = s.d2 / s.value - lam * lam;
        tr_hprime += e.multiplicity * lam_prime;
        tr_hsq += e.multiplicity * lam * lam;
    }
    return -tr_hprime - tr_hsq;
}

/// Cauchy-Schwarz defect of the shape operator: tr h^2 - (tr h)^2/(d-1).
/// Expanded into the pairwise form sum_{i<j} m_i m_j (lam_i - lam_j)^2 / (d-1),
/// which is nonnegative by construction and exactly zero when a single
/// curvature level is present -- the umbilic case.
inline double umbilicity_defect(const CurvatureSpectrum& spectrum, double r) {
    const auto eigs = shape_eigenvalues(spectrum, r);
    const int codim = spectrum.codimension();
    if (codim <= 0) {
        throw ValidationError("umbilicity_defect requires a nonempty spectrum");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < eigs.size(); ++i) {
        for (std::size_t j = i + 1; j < eigs.size(); ++j) {
            const double diff = eigs[i].value - eigs[j].value;
            sum += static_cast<double>(eigs[i].multiplicity)
                 * static_cast<double>(eigs[j].multiplicity) * diff * diff;
        }
    }
    return sum / static_cast<double>(codim);
}

inline double umbilicity_defect(const ModelSpace& space, double r) {
    if (!(r > 0.0) || !(r < space.r_max)) {
        throw DomainError("umbilicity_defect requires 0 < r < r_max, got r="
                          + std::to_string(r));
    }
    return umbilicity_defect(space.spectrum, r);
}

}  // namespace radialis
