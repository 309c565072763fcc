#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "radialis/jet.hpp"
#include "support.hpp"

using namespace radialis;
using Catch::Matchers::WithinAbs;

TEST_CASE("jet of the identity and basic combinations", "[jets]") {
    const Jet2 x = Jet2::variable(3.0);
    CHECK(x.value == 3.0);
    CHECK(x.d1 == 1.0);
    CHECK(x.d2 == 0.0);

    const Jet2 sq = x * x;  // r^2 at r=3
    CHECK(sq.value == 9.0);
    CHECK(sq.d1 == 6.0);
    CHECK(sq.d2 == 2.0);

    const Jet2 affine = Jet2::constant(1.0) + Jet2::variable(0.25);
    CHECK(affine.value == 1.25);
    CHECK(affine.d1 == 1.0);
    CHECK(affine.d2 == 0.0);
}

TEST_CASE("a jet divided by itself is exactly one", "[jets]") {
    const Jet2 s = sinh(Jet2::variable(1.3));
    const Jet2 q = s / s;
    CHECK(q.value == 1.0);
    CHECK(q.d1 == 0.0);
    CHECK(q.d2 == 0.0);
}

TEST_CASE("division by a zero-valued jet is a domain error", "[jets]") {
    const Jet2 zero = Jet2::constant(0.0);
    CHECK_THROWS_AS(Jet2::variable(1.0) / zero, DomainError);
}

TEST_CASE("elementary jets at the origin", "[jets]") {
    const Jet2 x = Jet2::variable(0.0);
    const Jet2 c = cos(x);
    CHECK(c.value == 1.0);
    CHECK(c.d1 == 0.0);
    CHECK(c.d2 == -1.0);
    const Jet2 ch = cosh(x);
    CHECK(ch.value == 1.0);
    CHECK(ch.d1 == 0.0);
    CHECK(ch.d2 == 1.0);
}

TEST_CASE("integer powers, including the negative ones", "[jets]") {
    // r^{2-n} with n=4 at the jet (1,1,0): value 1, d1 -2, d2 6.
    const Jet2 j = pow(Jet2{1.0, 1.0, 0.0}, 2 - 4);
    CHECK_THAT(j.value, WithinAbs(1.0, 1e-15));
    CHECK_THAT(j.d1, WithinAbs(-2.0, 1e-15));
    CHECK_THAT(j.d2, WithinAbs(6.0, 1e-15));

    CHECK(pow(Jet2::variable(2.0), 0).value == 1.0);
    CHECK(pow(Jet2::variable(2.0), 0).d1 == 0.0);
}

TEST_CASE("real powers agree with the integer path on whole exponents", "[jets]") {
    const Jet2 x = Jet2::variable(1.7);
    const Jet2 a = pow(x, 3);
    const Jet2 b = pow(x, 3.0);
    CHECK(a.value == b.value);
    CHECK(a.d1 == b.d1);
    CHECK(a.d2 == b.d2);

    const Jet2 h = pow(x, 0.5);
    CHECK_THAT(h.value, WithinAbs(std::sqrt(1.7), 1e-14));
    CHECK_THAT(h.d1, WithinAbs(0.5 / std::sqrt(1.7), 1e-13));

    CHECK_THROWS_AS(pow(Jet2::variable(-1.0), 0.5), DomainError);
    CHECK_THROWS_AS(log(Jet2::variable(0.0)), DomainError);
}

TEST_CASE("jet derivatives match finite differences of the value channel", "[jets]") {
    struct Case {
        const char* name;
        Jet2 (*fn)(const Jet2&);
        double (*plain)(double);
    };
    const Case cases[] = {
        {"sin", [](const Jet2& a) { return sin(a); }, [](double r) { return std::sin(r); }},
        {"cos", [](const Jet2& a) { return cos(a); }, [](double r) { return std::cos(r); }},
        {"sinh", [](const Jet2& a) { return sinh(a); }, [](double r) { return std::sinh(r); }},
        {"cosh", [](const Jet2& a) { return cosh(a); }, [](double r) { return std::cosh(r); }},
        {"exp", [](const Jet2& a) { return exp(a); }, [](double r) { return std::exp(r); }},
        {"log", [](const Jet2& a) { return log(a); }, [](double r) { return std::log(r); }},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        // Up to r = 2.2 so |f| stays small enough that the second-difference
        // roundoff floor sits clear of the 1e-6 gate.
        for (double r : testsupport::test_grid(0.3, 2.2, 14)) {
            const Jet2 j = c.fn(Jet2::variable(r));
            const auto fd = testsupport::fd_oracle(c.plain, r, 1e-4);
            CHECK_THAT(j.d1, WithinAbs(fd.d1, 1e-6));
            CHECK_THAT(j.d2, WithinAbs(fd.d2, 1e-6));
        }
    }
    // pow with a non-integer exponent goes through exp(k log a).
    for (double r : testsupport::test_grid(0.4, 2.5, 8)) {
        const Jet2 j = pow(Jet2::variable(r), 2.5);
        const auto fd = testsupport::fd_oracle([](double s) { return std::pow(s, 2.5); }, r);
        CHECK_THAT(j.d1, WithinAbs(fd.d1, 1e-6));
        CHECK_THAT(j.d2, WithinAbs(fd.d2, 1e-6));
    }
}

TEST_CASE("jet arithmetic is exact on random quadratics", "[jets]") {
    auto rng = testsupport::seeded_rng();
    std::uniform_real_distribution<double> coeff(-4.0, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = coeff(rng), b = coeff(rng), c = coeff(rng);
        const double p = coeff(rng), q = coeff(rng), s = coeff(rng);
        const double r = coeff(rng);
        const Jet2 x = Jet2::variable(r);
        // f = a r^2 + b r + c and g = p r^2 + q r + s, combined in jets.
        const Jet2 f = a * (x * x) + b * x + Jet2::constant(c);
        const Jet2 g = p * (x * x) + q * x + Jet2::constant(s);
        const Jet2 sum = f + g;
        const Jet2 diff = f - g;
        // The d2 channel is exact (only doublings and one add); value and d1
        // pick up epsilon-level reassociation against the direct evaluation.
        CHECK_THAT(sum.value, WithinAbs((a + p) * r * r + (b + q) * r + (c + s), 1e-12));
        CHECK_THAT(sum.d1, WithinAbs(2.0 * (a + p) * r + (b + q), 1e-12));
        CHECK(sum.d2 == 2.0 * (a + p));
        CHECK(diff.d2 == 2.0 * (a - p));
        // The 2-jet of f*g carries the true derivatives of the degree-4
        // product polynomial; check against its convolved coefficients.
        const Jet2 prod = f * g;
        const double k0 = c * s;
        const double k1 = b * s + c * q;
        const double k2 = a * s + b * q + c * p;
        const double k3 = a * q + b * p;
        const double k4 = a * p;
        const double v = (((k4 * r + k3) * r + k2) * r + k1) * r + k0;
        const double d1 = ((4.0 * k4 * r + 3.0 * k3) * r + 2.0 * k2) * r + k1;
        const double d2 = (12.0 * k4 * r + 6.0 * k3) * r + 2.0 * k2;
        // Values stay below ~5e3 here, so epsilon-level accumulation is ~1e-11.
        CHECK_THAT(prod.value, WithinAbs(v, 1e-10));
        CHECK_THAT(prod.d1, WithinAbs(d1, 1e-10));
        CHECK_THAT(prod.d2, WithinAbs(d2, 1e-10));
    }
}
