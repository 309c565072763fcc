#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "radialis/jacobi.hpp"
#include "radialis/model_space.hpp"
#include "radialis/radial_ops.hpp"
#include "support.hpp"

using namespace radialis;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("scalar Jacobi solutions hit their closed forms", "[jacobi]") {
    const Jet2 flat = jacobi_solution(0.0, 2.0);
    CHECK(flat.value == 2.0);
    CHECK(flat.d1 == 1.0);
    CHECK(flat.d2 == 0.0);

    for (double r : testsupport::test_grid(0.1, 3.0, 9)) {
        const Jet2 round = jacobi_solution(1.0, r);
        CHECK_THAT(round.value, WithinRel(std::sin(r), 1e-14));
        CHECK_THAT(round.d1, WithinAbs(std::cos(r), 1e-14));
        CHECK_THAT(round.d2, WithinAbs(-std::sin(r), 1e-14));

        // K = -4: sinh(2r)/2, cosh(2r), 2 sinh(2r) solves y'' = 4y with
        // y(0) = 0, y'(0) = 1.
        const Jet2 pinched = jacobi_solution(-4.0, r);
        CHECK_THAT(pinched.value, WithinRel(std::sinh(2.0 * r) / 2.0, 1e-14));
        CHECK_THAT(pinched.d1, WithinRel(std::cosh(2.0 * r), 1e-14));
        CHECK_THAT(pinched.d2, WithinRel(2.0 * std::sinh(2.0 * r), 1e-14));
        CHECK_THAT(pinched.d2, WithinRel(4.0 * pinched.value, 1e-13));
    }
}

TEST_CASE("conjugate points are fenced off", "[jacobi]") {
    const double pi = std::numbers::pi_v<double>;
    CHECK_THROWS_AS(jacobi_solution(1.0, pi), ConjugatePointError);
    CHECK_THROWS_AS(jacobi_solution(4.0, pi / 2.0), ConjugatePointError);
    CHECK_NOTHROW(jacobi_solution(4.0, pi / 2.0 - 0.01));
    CHECK_THROWS_AS(jacobi_solution(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(theta_from_spectrum(CurvatureSpectrum{{{4.0, 3}}}, 2.0),
                    ConjugatePointError);
}

TEST_CASE("small radii follow the r - K r^3/6 Taylor law", "[jacobi]") {
    for (double K : {1.0, -1.0, -4.0, 3.0}) {
        CAPTURE(K);
        const auto defect = [K](double r) {
            return std::abs(jacobi_solution(K, r).value - (r - K * r * r * r / 6.0));
        };
        const double d_coarse = defect(1e-2);
        const double d_fine = defect(1e-3);
        // Quintic remainder: one decade in r is five decades in the defect.
        const double exponent = std::log10(d_coarse / d_fine);
        CHECK(exponent >= 4.5);
    }
}

TEST_CASE("spectrum products recover the catalog densities", "[jacobi]") {
    // {(-1, 2n-2), (-4, 1)} multiplies out to sinh^{2n-1} r cosh r via the
    // double angle identity sinh(2r)/2 = sinh r cosh r.
    for (int n : {1, 2, 3}) {
        CurvatureSpectrum spec;
        if (n > 1) {
            spec.entries = {{-4.0, 1}, {-1.0, 2 * n - 2}};
        } else {
            spec.entries = {{-4.0, 1}};
        }
        for (double r : testsupport::test_grid(0.1, 2.5, 9)) {
            const double expect = std::pow(std::sinh(r), 2 * n - 1) * std::cosh(r);
            CHECK_THAT(theta_from_spectrum(spec, r).value, WithinRel(expect, 1e-13));
        }
    }
    CurvatureSpectrum sphere{{{1.0, 4}}};
    for (double r : testsupport::test_grid(0.1, 3.0, 9)) {
        CHECK_THAT(theta_from_spectrum(sphere, r).value,
                   WithinRel(std::pow(std::sin(r), 4), 1e-13));
    }
    CurvatureSpectrum flat{{{0.0, 4}}};
    CHECK_THAT(theta_from_spectrum(flat, 2.0).value, WithinRel(16.0, 1e-14));
}

TEST_CASE("numerical integration matches the closed forms", "[jacobi]") {
    CHECK_THAT(jacobi_integrate(1.0, 1.0, 1e-3), WithinAbs(std::sin(1.0), 1e-10));
    CHECK_THAT(jacobi_integrate(0.0, 5.0, 1e-2), WithinAbs(5.0, 1e-12));
    CHECK_THAT(jacobi_integrate(-4.0, 1.0, 1e-3), WithinAbs(std::sinh(2.0) / 2.0, 1e-9));
    CHECK_THROWS_AS(jacobi_integrate(1.0, 1.0, 0.2), ValidationError);
}

TEST_CASE("integration error drops 4th order under step halving", "[jacobi]") {
    for (double K : {1.0, -1.0, -4.0}) {
        CAPTURE(K);
        const double exact = jacobi_solution(K, 1.0).value;
        const double coarse = std::abs(jacobi_integrate(K, 1.0, 0.05) - exact);
        const double fine = std::abs(jacobi_integrate(K, 1.0, 0.025) - exact);
        CHECK(coarse / fine >= 15.0);
    }
}

TEST_CASE("shape eigenvalues and their sum rule", "[jacobi]") {
    // Sphere: umbilic with cot r; Euclidean: 1/r.
    CurvatureSpectrum sphere{{{1.0, 3}}};
    const auto se = shape_eigenvalues(sphere, 0.8);
    REQUIRE(se.size() == 1);
    CHECK(se[0].multiplicity == 3);
    CHECK_THAT(se[0].value, WithinRel(1.0 / std::tan(0.8), 1e-13));

    CurvatureSpectrum flat{{{0.0, 5}}};
    CHECK_THAT(shape_eigenvalues(flat, 2.5)[0].value, WithinRel(0.4, 1e-14));

    // Complex hyperbolic: coth r with multiplicity 2n-2 plus 2 coth 2r once;
    // 2 coth 2r = coth r + tanh r makes the weighted sum (2n-1) coth r + tanh r.
    for (int n : {2, 3}) {
        const ModelSpace ch = ModelSpace::make(SpaceFamily::ComplexHyperbolic, n);
        for (double r : testsupport::test_grid(0.2, 2.6, 7)) {
            const auto eigs = shape_eigenvalues(ch.spectrum, r);
            REQUIRE(eigs.size() == 2);
            CHECK_THAT(eigs[0].value, WithinRel(2.0 / std::tanh(2.0 * r), 1e-13));
            CHECK_THAT(eigs[1].value, WithinRel(1.0 / std::tanh(r), 1e-13));
            CHECK_THAT(eigs[0].value, WithinRel(1.0 / std::tanh(r) + std::tanh(r), 1e-12));

            double weighted = 0.0;
            for (const auto& e : eigs) weighted += e.multiplicity * e.value;
            CHECK_THAT(weighted, WithinAbs(mean_curvature(ch, r), 1e-10));
        }
    }
}

TEST_CASE("weighted shape sum equals mean curvature across the catalog", "[jacobi]") {
    std::vector<ModelSpace> spaces;
    for (int n : {2, 4}) {
        spaces.push_back(ModelSpace::make(SpaceFamily::Euclidean, n));
        spaces.push_back(ModelSpace::make(SpaceFamily::Sphere, n));
        spaces.push_back(ModelSpace::make(SpaceFamily::Hyperbolic, n));
        spaces.push_back(ModelSpace::make(SpaceFamily::ComplexHyperbolic, n));
        spaces.push_back(ModelSpace::make(SpaceFamily::QuaternionicHyperbolic, n));
    }
    for (const auto& s : spaces) {
        CAPTURE(s.name());
        for (double r : testsupport::test_grid(0.1, 3.0, 20)) {
            double weighted = 0.0;
            for (const auto& e : shape_eigenvalues(s.spectrum, r)) {
                weighted += e.multiplicity * e.value;
            }
            CHECK_THAT(weighted, WithinAbs(mean_curvature(s, r), 1e-10));
        }
    }
}
