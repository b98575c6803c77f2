#include "plunet/activation.hpp"

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "plunet/rng.hpp"

using namespace plunet;

TEST_CASE("plu forward matches the defining values") {
    const Activation plu = Activation::plu(0.1, 1.0);
    CHECK(plu.forward(0.0) == 0.0);
    CHECK(plu.forward(2.0) == doctest::Approx(1.1).epsilon(1e-12));
    CHECK(plu.forward(-2.0) == doctest::Approx(-1.1).epsilon(1e-12));
    CHECK(plu.forward(0.5) == 0.5);  // inner segment is the identity
    CHECK(plu.forward(1.0) == 1.0);
    CHECK(plu.forward(-1.0) == -1.0);
}

TEST_CASE("relu and identity forward") {
    CHECK(Activation::relu().forward(-3.0) == 0.0);
    CHECK(Activation::relu().forward(3.0) == 3.0);
    CHECK(Activation::identity().forward(7.5) == 7.5);
    CHECK(Activation::tanh().forward(0.0) == 0.0);
    CHECK(Activation::leaky_relu(0.2).forward(-2.0) == doctest::Approx(-0.4));
}

TEST_CASE("plu forward is bit-identical to the max/min composition") {
    const double alpha = 0.1, c = 1.0;
    const Activation plu = Activation::plu(alpha, c);
    Rng rng(101);
    for (int i = 0; i < 1000000; ++i) {
        const double x = rng.uniform(-10.0, 10.0);
        const double composed = std::max(alpha * (x + c) - c, std::min(alpha * (x - c) + c, x));
        CHECK(plu.forward(x) == composed);
    }
    // and at the knees themselves
    CHECK(plu.forward(c) == std::max(alpha * (c + c) - c, std::min(alpha * (c - c) + c, c)));
    CHECK(plu.forward(-c) == std::max(alpha * 0.0 - c, std::min(alpha * (-c - c) + c, -c)));
}

TEST_CASE("derivatives: segment slopes with the inner-segment tie-break") {
    const Activation plu = Activation::plu(0.1, 1.0);
    CHECK(plu.derivative(0.0) == 1.0);
    CHECK(plu.derivative(5.0) == 0.1);
    CHECK(plu.derivative(-5.0) == 0.1);
    CHECK(plu.derivative(1.0) == 1.0);   // kink belongs to the inner segment
    CHECK(plu.derivative(-1.0) == 1.0);

    CHECK(Activation::tanh().derivative(0.0) == 1.0);
    CHECK(Activation::relu().derivative(0.0) == 0.0);
    CHECK(Activation::relu().derivative(2.0) == 1.0);
    CHECK(Activation::leaky_relu(0.3).derivative(-1.0) == 0.3);
    CHECK(Activation::leaky_relu(0.3).derivative(0.0) == 1.0);
    CHECK(Activation::identity().derivative(123.0) == 1.0);
}

TEST_CASE("derivatives match central finite differences away from kinks") {
    const Activation acts[] = {Activation::plu(0.1, 1.0), Activation::tanh(),
                               Activation::relu(), Activation::leaky_relu(0.1),
                               Activation::identity()};
    Rng rng(102);
    const double h = 1e-6;
    for (const Activation& a : acts) {
        int checked = 0;
        while (checked < 1000) {
            const double x = rng.uniform(-5.0, 5.0);
            const double kink_dist = (a.kind() == ActKind::kPlu)
                                         ? std::abs(std::abs(x) - a.c())
                                         : std::abs(x);
            if (a.kind() != ActKind::kTanh && a.kind() != ActKind::kIdentity &&
                kink_dist <= 1e-3) {
                continue;
            }
            const double fd = (a.forward(x + h) - a.forward(x - h)) / (2.0 * h);
            const double an = a.derivative(x);
            CHECK(std::abs(fd - an) <= 1e-6 * std::max({1.0, std::abs(fd), std::abs(an)}));
            ++checked;
        }
    }
}

TEST_CASE("plu inverse: hand values and the closed form") {
    const Activation plu = Activation::plu(0.1, 1.0);
    CHECK(plu.inverse(1.1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(plu.inverse(0.5) == 0.5);
    CHECK(plu.inverse(-1.1) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("inverse domain rules") {
    CHECK_THROWS_AS(Activation::relu().inverse(0.5), NotInvertibleError);
    CHECK_THROWS_AS(Activation::tanh().inverse(1.0), DomainError);
    CHECK_THROWS_AS(Activation::tanh().inverse(-1.0), DomainError);
    CHECK_THROWS_AS(Activation::tanh().inverse(2.5), DomainError);
    CHECK(Activation::tanh().inverse(0.5) == doctest::Approx(std::atanh(0.5)));
    CHECK(Activation::leaky_relu(0.25).inverse(-1.0) == doctest::Approx(-4.0));
    CHECK(Activation::identity().inverse(-7.0) == -7.0);
}

TEST_CASE("forward(inverse(y)) round-trips for every invertible kind") {
    const Activation acts[] = {Activation::plu(0.1, 1.0), Activation::plu(0.5, 2.0),
                               Activation::tanh(), Activation::leaky_relu(0.1),
                               Activation::identity()};
    Rng rng(103);
    for (const Activation& a : acts) {
        for (int i = 0; i < 1000; ++i) {
            const double y = (a.kind() == ActKind::kTanh) ? rng.uniform(-0.999, 0.999)
                                                          : rng.uniform(-20.0, 20.0);
            const double back = a.forward(a.inverse(y));
            CHECK(std::abs(back - y) < 1e-10 * (1.0 + std::abs(y)));
        }
    }
}

TEST_CASE("plu is odd") {
    const Activation plu = Activation::plu(0.1, 1.0);
    Rng rng(104);
    for (int i = 0; i < 100000; ++i) {
        const double x = rng.uniform(0.0, 10.0);
        CHECK(std::abs(plu.forward(-x) + plu.forward(x)) <= 1e-15);
    }
}

TEST_CASE("plu pieces agree exactly at the knees") {
    Rng rng(105);
    for (int i = 0; i < 100; ++i) {
        const double alpha = rng.uniform(0.01, 0.99);
        const double c = rng.uniform(0.1, 5.0);
        CHECK(alpha * (c - c) + c == c);     // upper piece at x = c
        CHECK(alpha * (-c + c) - c == -c);   // lower piece at x = -c
        const Activation plu = Activation::plu(alpha, c);
        CHECK(plu.forward(c) == c);
        CHECK(plu.forward(-c) == -c);
    }
}

TEST_CASE("plu is strictly increasing") {
    const Activation plu = Activation::plu(0.1, 1.0);
    Rng rng(106);
    for (int i = 0; i < 100000; ++i) {
        double x1 = rng.uniform(-50.0, 50.0);
        double x2 = rng.uniform(-50.0, 50.0);
        if (x1 == x2) continue;
        if (x1 > x2) std::swap(x1, x2);
        CHECK(plu.forward(x1) < plu.forward(x2));
    }
}

TEST_CASE("plu gradient never vanishes") {
    const Activation plu = Activation::plu(0.1, 1.0);
    Rng rng(107);
    for (int i = 0; i < 100000; ++i) {
        CHECK(plu.derivative(rng.uniform(-100.0, 100.0)) >= 0.1);
    }
}

TEST_CASE("activation parameters are validated") {
    CHECK_THROWS_AS(Activation::plu(0.0, 1.0), ConfigError);
    CHECK_THROWS_AS(Activation::plu(1.0, 1.0), ConfigError);
    CHECK_THROWS_AS(Activation::plu(-0.1, 1.0), ConfigError);
    CHECK_THROWS_AS(Activation::plu(0.1, 0.0), ConfigError);
    CHECK_THROWS_AS(Activation::plu(0.1, -2.0), ConfigError);
    CHECK_THROWS_AS(Activation::leaky_relu(1.5), ConfigError);
    CHECK_NOTHROW(Activation::plu(0.5, 3.0));
    // alpha and c are stored but unchecked for the other kinds
    CHECK_NOTHROW(Activation(ActKind::kTanh, 9.0, -1.0));
}

TEST_CASE("activation names round-trip") {
    for (ActKind kind : {ActKind::kPlu, ActKind::kTanh, ActKind::kRelu, ActKind::kLeakyRelu,
                         ActKind::kIdentity}) {
        CHECK(act_kind_from_name(act_kind_name(kind)) == kind);
    }
    CHECK_THROWS_AS(act_kind_from_name("swish"), ConfigError);
}
