#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radialis/errors.hpp"
#include "radialis/jet.hpp"

namespace radialis {

enum class SpaceFamily {
    Euclidean,
    Sphere,
    Hyperbolic,
    ComplexHyperbolic,
    QuaternionicHyperbolic,
};

inline constexpr SpaceFamily kFamilyOrder[] = {
    SpaceFamily::Euclidean,
    SpaceFamily::Sphere,
    SpaceFamily::Hyperbolic,
    SpaceFamily::ComplexHyperbolic,
    SpaceFamily::QuaternionicHyperbolic,
};

struct SpectrumEntry {
    double curvature = 0.0;
    int multiplicity = 0;
};

/// Eigenvalue data (sectional curvature, multiplicity) of the radial Jacobi
/// operator R(., g')g' along a unit-speed geodesic. Multiplicities sum to
/// d-1; entries are sorted by curvature with no duplicates.
struct CurvatureSpectrum {
    std::vector<SpectrumEntry> entries;

    int codimension() const {
        int m = 0;
        for (const auto& e : entries) m += e.multiplicity;
        return m;
    }

    /// Sum of K*mult: the radial Ricci curvature of a symmetric model.
    double curvature_trace() const {
        double t = 0.0;
        for (const auto& e : entries) t += e.curvature * e.multiplicity;
        return t;
    }

    void validate() const {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].multiplicity <= 0) {
                throw ValidationError("curvature spectrum multiplicities must be positive");
            }
            if (i > 0 && !(entries[i - 1].curvature < entries[i].curvature)) {
                throw ValidationError("curvature spectrum entries must be strictly sorted by K");
            }
        }
    }
};

/// One of the five model geometries, defined by its real dimension and the
/// curvature spectrum seen along radial geodesics. Densities come in two
/// flavours: Theta(r), the geodesic-sphere area element per unit solid angle,
/// and omega(r) = Theta(r)/r^{d-1}, the volume density in normal coordinates.
struct ModelSpace {
    SpaceFamily family = SpaceFamily::Euclidean;
    int n = 0;    // family parameter: real dimension for R^n/S^n/H^n, complex
                  // resp. quaternionic dimension for CH^n/QH^n
    int dim = 0;  // real dimension d
    CurvatureSpectrum spectrum;
    double r_max = std::numeric_limits<double>::infinity();
    double einstein_constant = 0.0;

    static ModelSpace make(SpaceFamily family, int n);

    Jet2 density(double r) const;  // Theta(r), 0 < r < r_max
    Jet2 omega(double r) const;    // omega(r), 0 <= r < r_max

    bool compact() const { return family == SpaceFamily::Sphere; }
    std::string name() const;

private:
    void require_inside(double r, bool allow_zero) const;
};

inline const char* family_id(SpaceFamily f) {
    switch (f) {
        case SpaceFamily::Euclidean: return "euclidean";
        case SpaceFamily::Sphere: return "sphere";
        case SpaceFamily::Hyperbolic: return "hyperbolic";
        case SpaceFamily::ComplexHyperbolic: return "chn";
        case SpaceFamily::QuaternionicHyperbolic: return "qhn";
    }
    return "?";
}

inline std::optional<SpaceFamily> family_from_id(std::string_view id) {
    for (SpaceFamily f : kFamilyOrder) {
        if (id == family_id(f)) return f;
    }
    return std::nullopt;
}

inline ModelSpace ModelSpace::make(SpaceFamily family, int n) {
    const bool rank_one = family == SpaceFamily::ComplexHyperbolic
                       || family == SpaceFamily::QuaternionicHyperbolic;
    if (rank_one ? n < 1 : n < 2) {
        throw ValidationError(std::string("parameter n=") + std::to_string(n)
                              + " out of range for family " + family_id(family));
    }

    ModelSpace s;
    s.family = family;
    s.n = n;
    switch (family) {
        case SpaceFamily::Euclidean:
            s.dim = n;
            s.spectrum.entries = {{0.0, n - 1}};
            break;
        case SpaceFamily::Sphere:
            s.dim = n;
            s.spectrum.entries = {{1.0, n - 1}};
            s.r_max = std::numbers::pi_v<double>;
            break;
        case SpaceFamily::Hyperbolic:
            s.dim = n;
            s.spectrum.entries = {{-1.0, n - 1}};
            break;
        case SpaceFamily::ComplexHyperbolic:
            s.dim = 2 * n;
            if (n > 1) {
                s.spectrum.entries = {{-4.0, 1}, {-1.0, 2 * n - 2}};
            } else {
                // CH^1: only the curvature -4 direction survives.
                s.spectrum.entries = {{-4.0, 1}};
            }
            break;
        case SpaceFamily::QuaternionicHyperbolic:
            s.dim = 4 * n;
            if (n > 1) {
                s.spectrum.entries = {{-4.0, 3}, {-1.0, 4 * n - 4}};
            } else {
                s.spectrum.entries = {{-4.0, 3}};
            }
            break;
    }
    s.spectrum.validate();
    s.einstein_constant = s.spectrum.curvature_trace();
    return s;
}

inline void ModelSpace::require_inside(double r, bool allow_zero) const {
    if (!std::isfinite(r) || r < 0.0 || (!allow_zero && r == 0.0) || r >= r_max) {
        throw DomainError("radius r=" + std::to_string(r) + " outside ("
                          + (allow_zero ? std::string("0 <=") : std::string("0 <")) + " r < "
                          + (compact() ? std::string("pi") : std::string("inf")) + ") for "
                          + name());
    }
}

inline Jet2 ModelSpace::density(double r) const {
    require_inside(r, /*allow_zero=*/false);
    const Jet2 x = Jet2::variable(r);
    switch (family) {
        case SpaceFamily::Euclidean:
            return pow(x, dim - 1);
        case SpaceFamily::Sphere:
            return pow(sin(x), n - 1);
        case SpaceFamily::Hyperbolic:
            return pow(sinh(x), n - 1);
        case SpaceFamily::ComplexHyperbolic:
            return pow(sinh(x), 2 * n - 1) * cosh(x);
        case SpaceFamily::QuaternionicHyperbolic:
            return pow(sinh(x), 4 * n - 1) * pow(cosh(x), 3);
    }
    throw ValidationError("unknown space family");
}

namespace detail {

// Jet of sin(r)/r resp. sinh(r)/r; at r = 0 the removable singularity is
// filled with the series limit (1, 0, -+1/3).
inline Jet2 sin_ratio(double r) {
    if (r == 0.0) return {1.0, 0.0, -1.0 / 3.0};
    const Jet2 x = Jet2::variable(r);
    return sin(x) / x;
}
inline Jet2 sinh_ratio(double r) {
    if (r == 0.0) return {1.0, 0.0, 1.0 / 3.0};
    const Jet2 x = Jet2::variable(r);
    return sinh(x) / x;
}

}  // namespace detail

inline Jet2 ModelSpace::omega(double r) const {
    require_inside(r, /*allow_zero=*/true);
    // Computed factor-wise as powers of sin(r)/r, sinh(r)/r and cosh(r): this
    // keeps omega well behaved down to r = 0 where Theta and r^{d-1} both
    // vanish to high order.
    const Jet2 ch = r == 0.0 ? Jet2{1.0, 0.0, 1.0} : cosh(Jet2::variable(r));
    switch (family) {
        case SpaceFamily::Euclidean:
            return Jet2::constant(1.0);
        case SpaceFamily::Sphere:
            return pow(detail::sin_ratio(r), n - 1);
        case SpaceFamily::Hyperbolic:
            return pow(detail::sinh_ratio(r), n - 1);
        case SpaceFamily::ComplexHyperbolic:
            return pow(detail::sinh_ratio(r), 2 * n - 1) * ch;
        case SpaceFamily::QuaternionicHyperbolic:
            return pow(detail::sinh_ratio(r), 4 * n - 1) * pow(ch, 3);
    }
    throw ValidationError("unknown space family");
}

inline std::string ModelSpace::name() const {
    switch (family) {
        case SpaceFamily::Euclidean: return "R^" + std::to_string(n);
        case SpaceFamily::Sphere: return "S^" + std::to_string(n);
        case SpaceFamily::Hyperbolic: return "H^" + std::to_string(n);
        case SpaceFamily::ComplexHyperbolic: return "CH^" + std::to_string(n);
        case SpaceFamily::QuaternionicHyperbolic: return "QH^" + std::to_string(n);
    }
    return "?";
}

}  // namespace radialis
