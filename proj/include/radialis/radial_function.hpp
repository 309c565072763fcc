#pragma once

#include <functional>
#include <string>
#include <utility>

#include "radialis/errors.hpp"
#include "radialis/jet.hpp"

namespace radialis {

/// A radial function r -> Jet2 on an open interval of radii, carrying a label
/// so evaluation failures can say which function broke and where.
struct RadialFunction {
    std::string label;
    std::function<Jet2(double)> fn;

    Jet2 operator()(double r) const {
        try {
            Jet2 j = fn(r);
            if (!j.finite()) {
                throw DomainError("non-finite jet");
            }
            return j;
        } catch (const std::exception& e) {
            throw DomainError("evaluating '" + label + "' at r=" + std::to_string(r)
                              + ": " + e.what());
        }
    }
};

inline RadialFunction make_radial(std::string label, std::function<Jet2(double)> fn) {
    return RadialFunction{std::move(label), std::move(fn)};
}

inline RadialFunction radial_identity() {
    return make_radial("r", [](double r) { return Jet2::variable(r); });
}

inline RadialFunction radial_power(int k) {
    return make_radial("r^" + std::to_string(k),
                       [k](double r) { return pow(Jet2::variable(r), k); });
}

inline RadialFunction radial_cos() {
    return make_radial("cos(r)", [](double r) { return cos(Jet2::variable(r)); });
}

inline RadialFunction radial_cosh() {
    return make_radial("cosh(r)", [](double r) { return cosh(Jet2::variable(r)); });
}

/// f(r) = 1 + ((n+1)/n) sinh^2 r, the quadratic-in-sinh eigenfunction of the
/// complex and quaternionic hyperbolic spaces.
inline RadialFunction radial_sinh_squared_eigenfunction(int n) {
    const double c = static_cast<double>(n + 1) / static_cast<double>(n);
    return make_radial("1+((" + std::to_string(n + 1) + ")/" + std::to_string(n) + ")*sinh^2(r)",
                       [c](double r) {
                           const Jet2 s = sinh(Jet2::variable(r));
                           return 1.0 + c * (s * s);
                       });
}

}  // namespace radialis
