#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <string>

#include "radialis/errors.hpp"
#include "radialis/jet.hpp"
#include "radialis/model_space.hpp"
#include "radialis/radial_ops.hpp"

namespace radialis {

/// Volume of the unit ball in R^d: pi^{d/2} / Gamma(d/2 + 1), evaluated by
/// the half-integer Gamma recursion so integer dimensions come out exact
/// (no general Gamma approximation involved).
inline double unit_ball_volume(int d) {
    if (d < 1) {
        throw ValidationError("unit_ball_volume requires d >= 1");
    }
    const double pi = std::numbers::pi_v<double>;
    // Gamma(d/2 + 1) from Gamma(1) = 1 or Gamma(3/2) = sqrt(pi)/2 upward.
    double gamma, power;
    int k;
    if (d % 2 == 0) {
        gamma = 1.0;              // Gamma(1)
        power = 1.0;              // pi^{d/2} with integer exponent
        k = d / 2;                // steps of Gamma(x+1) = x Gamma(x) from x=1
        for (int i = 1; i <= k; ++i) {
            gamma *= static_cast<double>(i);
            power *= pi;
        }
    } else {
        gamma = std::sqrt(pi) / 2.0;  // Gamma(3/2)
        power = std::sqrt(pi);
        k = (d - 1) / 2;
        for (int i = 1; i <= k; ++i) {
            gamma *= 0.5 + static_cast<double>(i);
            power *= pi;
        }
    }
    return power / gamma;
}

/// Area of the unit (d-1)-sphere: d * omega_d.
inline double sphere_area(int d) {
    return static_cast<double>(d) * unit_ball_volume(d);
}

/// 2-jet of G'(r) = 1 / (d omega_d Theta(r)), the derivative of the radial
/// Green's function. Its flux through the geodesic sphere is identically 1.
inline Jet2 green_derivative_jet(const ModelSpace& space, double r) {
    return Jet2::constant(1.0 / sphere_area(space.dim)) / space.density(r);
}

inline double green_derivative(const ModelSpace& space, double r) {
    return green_derivative_jet(space, r).value;
}

/// vol(boundary D_r) * G'(r); equal to 1 up to machine rounding.
inline double flux(const ModelSpace& space, double r) {
    return sphere_area(space.dim) * space.density(r).value * green_derivative(space, r);
}

/// |G'' + H G'|: the pointwise harmonicity defect of the Green's function
/// away from its pole.
inline double green_harmonicity_residual(const ModelSpace& space, double r) {
    const Jet2 gp = green_derivative_jet(space, r);
    return std::abs(gp.d1 + mean_curvature(space, r) * gp.value);
}

namespace detail {

// On the sphere G' blows up at the antipode; the construction is local, so
// quadrature stays below pi by this margin.
inline constexpr double kSphereQuadratureMargin = 1e-3;

inline void check_green_radius(const ModelSpace& space, double r) {
    double cap = space.r_max;
    if (space.compact()) cap = space.r_max - kSphereQuadratureMargin;
    if (!(r > 0.0) || !(r <= cap)) {
        throw DomainError("green radius r=" + std::to_string(r) + " outside (0, "
                          + std::to_string(cap) + "] for " + space.name());
    }
}

// Closed-form anchor: on Euclidean space G is pinned to the classical
// fundamental solution, r^{2-n}/((2-n) n omega_n), or log(r)/(2 pi) in the
// plane. Elsewhere G is canonical only up to a constant and the anchor is 0.
inline double green_anchor(const ModelSpace& space, double r_ref) {
    if (space.family != SpaceFamily::Euclidean) return 0.0;
    const int d = space.dim;
    if (d == 2) {
        return std::log(r_ref) / (2.0 * std::numbers::pi_v<double>);
    }
    return std::pow(r_ref, 2 - d) / ((2.0 - d) * sphere_area(d));
}

struct QuadratureEstimate {
    double value = 0.0;
    double error = 0.0;
};

// Globally adaptive Simpson: leaves live in a worst-error-first queue and the
// worst one is split until the summed Richardson estimates |S_halves - S|/15
// fit the absolute budget. Subdivision effort lands only where the error
// actually is, which keeps near-singular endpoints cheap.
template <class F>
QuadratureEstimate adaptive_simpson(const F& f, double a, double b, double tol_abs) {
    struct Leaf {
        double a, m, b;
        double fa, fm, fb;
        double refined;  // S(left) + S(right) + delta/15
        double error;    // |delta|/15
        double flm, frm;
    };
    const auto make_leaf = [&f](double lo, double mid, double hi, double flo, double fmid,
                                double fhi) {
        Leaf leaf{lo, mid, hi, flo, fmid, fhi, 0.0, 0.0, 0.0, 0.0};
        const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
        leaf.flm = f(lm);
        leaf.frm = f(rm);
        const double h12 = (hi - lo) / 12.0;
        const double left = h12 * (flo + 4.0 * leaf.flm + fmid);
        const double right = h12 * (fmid + 4.0 * leaf.frm + fhi);
        const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        const double delta = left + right - whole;
        leaf.refined = left + right + delta / 15.0;
        leaf.error = std::abs(delta) / 15.0;
        return leaf;
    };

    // Keyed by error descending; insertion order breaks ties, so the result
    // is deterministic for a given integrand and interval.
    std::multimap<double, Leaf, std::greater<double>> queue;
    const double mid = 0.5 * (a + b);
    const Leaf root = make_leaf(a, mid, b, f(a), f(mid), f(b));
    double total_value = root.refined;
    double total_error = root.error;
    queue.emplace(root.error, root);

    for (int splits = 0; total_error > tol_abs && splits < 20000; ++splits) {
        const Leaf leaf = queue.begin()->second;
        queue.erase(queue.begin());
        total_value -= leaf.refined;
        total_error -= leaf.error;
        const double lm = 0.5 * (leaf.a + leaf.m), rm = 0.5 * (leaf.m + leaf.b);
        for (const Leaf& child : {make_leaf(leaf.a, lm, leaf.m, leaf.fa, leaf.flm, leaf.fm),
                                  make_leaf(leaf.m, rm, leaf.b, leaf.fm, leaf.frm, leaf.fb)}) {
            total_value += child.refined;
            total_error += child.error;
            queue.emplace(child.error, child);
        }
    }
    return {total_value, total_error};
}

inline std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

}  // namespace detail

/// G(r) as the anchored integral of G' from r_ref, by adaptive Simpson
/// quadrature with an absolute error target (default 1e-10).
inline double green_value(const ModelSpace& space, double r, double r_ref,
                          double tol_abs = 1e-10) {
    detail::check_green_radius(space, r);
    detail::check_green_radius(space, r_ref);
    double integral = 0.0;
    if (r != r_ref) {
        const auto q = detail::adaptive_simpson(
            [&space](double s) { return green_derivative(space, s); }, r_ref, r, tol_abs);
        if (!(q.error <= tol_abs)) {
            throw NumericalError("green_value quadrature reached error estimate "
                                     + detail::sci(q.error) + " above target "
                                     + detail::sci(tol_abs),
                                 q.error);
        }
        integral = q.value;
    }
    return detail::green_anchor(space, r_ref) + integral;
}

/// Anchored Green's values with an append-only quadrature cache. Reads are
/// safe concurrently once a radius is cached; concurrent insertions must be
/// serialized externally (they are idempotent).
class GreenProfile {
public:
    GreenProfile(ModelSpace space, double r_ref)
        : space_(std::move(space)), r_ref_(r_ref) {
        detail::check_green_radius(space_, r_ref_);
    }

    double operator()(double r) const {
        auto it = cache_.find(r);
        if (it != cache_.end()) return it->second;
        const double v = green_value(space_, r, r_ref_);
        cache_.emplace(r, v);
        return v;
    }

    const ModelSpace& space() const { return space_; }
    double reference_radius() const { return r_ref_; }

private:
    ModelSpace space_;
    double r_ref_;
    mutable std::map<double, double> cache_;
};

}  // namespace radialis
