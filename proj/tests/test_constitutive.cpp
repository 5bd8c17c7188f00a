// Copyright 2026 The ropesim authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "ropesim/energy_density.hpp"
#include "ropesim/errors.hpp"
#include "ropesim/hysteresis.hpp"
#include "ropesim/scenario.hpp"
#include "ropesim/tension_curve.hpp"
#include "test_support.hpp"

using namespace ropesim;
using Catch::Approx;

namespace {

Scenario reference_scenario() {
    Scenario s;
    s.mass = 80.0;
    s.gravity = 9.8;
    s.rope_length = 10.0;
    s.max_stretch = 1.0;
    s.initial_depth = 5.0;
    return s;
}

TensionCurve two_knot_linear() { return TensionCurve({0.0, 0.1}, {0.0, 1000.0}); }

} // namespace

TEST_CASE("tension curve validation") {
    CHECK_THROWS_AS(TensionCurve({0.0}, {0.0}), InvalidCurve);
    CHECK_THROWS_AS(TensionCurve({0.1, 0.2}, {0.0, 1.0}), InvalidCurve);   // origin missing
    CHECK_THROWS_AS(TensionCurve({0.0, 0.0}, {0.0, 1.0}), InvalidCurve);   // not increasing
    CHECK_THROWS_AS(TensionCurve({0.0, 0.2, 0.1}, {0.0, 1.0, 2.0}), InvalidCurve);
    CHECK_THROWS_AS(TensionCurve({0.0, 0.1, 0.2}, {0.0, 2.0, 1.0}), InvalidCurve);
    CHECK_THROWS_AS(TensionCurve({0.0, 0.1}, {0.0, -1.0}), InvalidCurve);
    CHECK_NOTHROW(TensionCurve({0.0, 0.1, 0.2}, {0.0, 1.0, 1.0}));
}

TEST_CASE("tension evaluation") {
    const Scenario s = reference_scenario();
    const TensionCurve ideal = ideal_plateau_law(s);

    // Plateau at b0 = m g (L + dL - h0)/dL = 80 * 9.8 * 6 / 1.
    CHECK(ideal.tension(0.05) == Approx(4704.0).epsilon(1e-12));
    CHECK(ideal.tension(-0.1) == 0.0);
    CHECK(two_knot_linear().tension(-0.1) == 0.0);
    CHECK(two_knot_linear().tension(0.05) == Approx(500.0).epsilon(1e-12));

    // Extrapolation continues the final slope.
    CHECK(two_knot_linear().tension(0.2) == Approx(2000.0).epsilon(1e-12));
    CHECK(ideal.tension(5.0) == Approx(4704.0).epsilon(1e-12));
}

TEST_CASE("strain_of_tension is the left generalized inverse") {
    const Scenario s = reference_scenario();
    const double ramp = 1e-4;
    const TensionCurve ideal = ideal_plateau_law(s, ramp);

    // Below the plateau the inverse stays inside the onset ramp (zero for
    // the unmollified law).
    CHECK(ideal.strain_of_tension(3000.0) <= ramp);
    // At the plateau tension exactly: the plateau's left endpoint.
    CHECK(ideal.strain_of_tension(4704.0) == Approx(ramp).epsilon(1e-12));
    CHECK(ideal.strain_of_tension(4704.0) <= ramp);

    CHECK(two_knot_linear().strain_of_tension(500.0) == Approx(0.05).epsilon(1e-12));
    CHECK(two_knot_linear().strain_of_tension(0.0) == 0.0);
    // Positive final slope: inverse extrapolates.
    CHECK(two_knot_linear().strain_of_tension(2000.0) == Approx(0.2).epsilon(1e-12));
    // Beyond a terminal plateau the tension is unreachable.
    CHECK_THROWS_AS(ideal.strain_of_tension(4705.0), TensionUnreachable);

    const auto interval = ideal.strain_interval_of_tension(4704.0);
    CHECK(interval.first == Approx(ramp).epsilon(1e-12));
    CHECK(std::isinf(interval.second));
    const auto point = two_knot_linear().strain_interval_of_tension(500.0);
    CHECK(point.first == Approx(point.second).epsilon(1e-12));
}

TEST_CASE("generalized-inverse ordering: strain_of_tension(tension(eps)) <= eps") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const TensionCurve law = test_support::random_tension_curve(rng);
        std::uniform_real_distribution<double> u(0.0, 0.3);
        for (int k = 0; k < 20; ++k) {
            const double eps = u(rng);
            const double b = law.tension(eps);
            if (b > law.max_tension()) continue;
            CHECK(law.strain_of_tension(b) <= eps + 1e-12);
        }
    }
}

TEST_CASE("energy of strain") {
    const Scenario s = reference_scenario();
    const double ramp = 1e-4;
    const TensionCurve ideal = ideal_plateau_law(s, ramp);

    // b0 * eps, up to the ramp deficit b0 * ramp / 2.
    const double w = energy_of_strain(ideal, 0.1);
    CHECK(std::abs(w - 470.4) <= 0.5 * 4704.0 * ramp + 1e-9);
    CHECK(w == Approx(4704.0 * (0.1 - 0.5 * ramp)).epsilon(1e-12));

    CHECK(energy_of_strain(ideal, 0.0) == 0.0);
    CHECK(energy_of_strain(two_knot_linear(), -0.5) == 0.0);

    // Quadrature oracle for the linear law: 0.5 * E * eps^2 with E = 10000.
    const double oracle =
        test_support::simpson([&](double e) { return two_knot_linear().tension(e); }, 0.0, 0.1);
    CHECK(oracle == Approx(50.0).epsilon(1e-9));
    CHECK(energy_of_strain(two_knot_linear(), 0.1) == Approx(50.0).epsilon(1e-12));
}

TEST_CASE("energy density round trip: differentiate then re-integrate") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const TensionCurve law = test_support::random_tension_curve(rng);
        const EnergyDensity w = EnergyDensity::from_tension_curve(law);
        // Independent exact integral of the tension curve up to each knot.
        std::vector<double> knots = law.strains();
        for (std::size_t i = 1; i < knots.size(); ++i) {
            const double expected = test_support::aligned_trapezoid(
                [&](double e) { return law.tension(e); }, 0.0, knots[i], knots);
            CHECK(w.value(knots[i]) == Approx(expected).epsilon(1e-10));
        }
        // Central differences of the piecewise-quadratic energy recover the
        // tension exactly inside segments.
        for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
            const double mid = 0.5 * (knots[i] + knots[i + 1]);
            const double h = 0.25 * (knots[i + 1] - knots[i]);
            const double diff = (w.value(mid + h) - w.value(mid - h)) / (2.0 * h);
            CHECK(diff == Approx(law.tension(mid)).margin(1e-10 * 5000.0));
        }
    }
}

TEST_CASE("ideal plateau law") {
    Scenario s = reference_scenario();
    CHECK(ideal_plateau_law(s).tension(0.5) == Approx(4704.0).epsilon(1e-12));

    s.initial_depth = s.rope_length;  // taut start: plateau at the bare weight
    CHECK(ideal_plateau_law(s).tension(0.5) == Approx(784.0).epsilon(1e-12));

    Scenario wide = reference_scenario();
    wide.max_stretch = 2.0;
    wide.initial_depth = 0.0;
    CHECK(ideal_plateau_law(wide).tension(0.5) == Approx(4704.0).epsilon(1e-12));

    Scenario bad = reference_scenario();
    bad.max_stretch = 0.0;
    CHECK_THROWS_AS(ideal_plateau_law(bad), InvalidScenario);
    bad = reference_scenario();
    bad.initial_depth = 11.0;
    CHECK_THROWS_AS(ideal_plateau_law(bad), InvalidScenario);
    CHECK_THROWS_AS(ideal_plateau_law(reference_scenario(), 0.0), InvalidCurve);
}

TEST_CASE("check_properties") {
    const EnergyDensity ideal =
        EnergyDensity::from_tension_curve(ideal_plateau_law(reference_scenario()));
    const PropertyReport r1 = ideal.check_properties();
    CHECK(r1.nonnegative);
    CHECK(r1.zero_at_origin);
    CHECK(r1.convex);
    CHECK(r1.all());

    // Raw double well with wells at 0 and 0.1: non-negative, anchored at
    // zero (the grid hits it exactly), non-convex.
    std::vector<double> eps, w;
    for (int i = -5; i <= 35; ++i) {
        const double e = 0.004 * i;
        eps.push_back(e);
        w.push_back(1e6 * e * e * (e - 0.1) * (e - 0.1));
    }
    const PropertyReport r2 = EnergyDensity::from_samples(eps, w).check_properties();
    CHECK(r2.nonnegative);
    CHECK(r2.zero_at_origin);
    CHECK_FALSE(r2.convex);

    // Shifted quadratic: W(0) = 1 violates only (P2).
    std::vector<double> eps3, w3;
    for (int i = 0; i <= 20; ++i) {
        const double e = -0.1 + 0.3 * i / 20.0;
        eps3.push_back(e);
        w3.push_back(5000.0 * e * e + 1.0);
    }
    const PropertyReport r3 = EnergyDensity::from_samples(eps3, w3).check_properties();
    CHECK(r3.nonnegative);
    CHECK_FALSE(r3.zero_at_origin);
    CHECK(r3.convex);
}

TEST_CASE("check_properties passes for the ideal law of random scenarios") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        Scenario s;
        s.mass = 30.0 + 100.0 * u(rng);
        s.gravity = 1.0 + 15.0 * u(rng);
        s.rope_length = 2.0 + 40.0 * u(rng);
        s.max_stretch = 0.2 + 4.0 * u(rng);
        s.initial_depth = s.rope_length * (2.0 * u(rng) - 1.0);
        const auto report = EnergyDensity::from_tension_curve(ideal_plateau_law(s))
                                .check_properties();
        CHECK(report.all());
    }
}

TEST_CASE("convexify: spec cases") {
    SECTION("convex input passes through unchanged") {
        std::vector<double> eps, w;
        for (int i = 0; i <= 30; ++i) {
            const double e = -0.1 + 0.25 * i / 30.0;
            eps.push_back(e);
            w.push_back(3000.0 * e * e);
        }
        const EnergyDensity env = convexify({eps, w});
        for (std::size_t i = 0; i < eps.size(); ++i)
            CHECK(env.value(eps[i]) == Approx(w[i]).margin(1e-14));
    }

    SECTION("double well develops the zero chord between the wells") {
        std::vector<double> eps, w;
        for (int i = 0; i <= 60; ++i) {
            const double e = -0.15 + 0.3 * i / 60.0;
            const double q = e * e - 0.01;
            eps.push_back(e);
            w.push_back(q * q);
        }
        const EnergyDensity env = convexify({eps, w});
        const auto oracle = test_support::brute_force_envelope(eps, w);
        for (std::size_t i = 0; i < eps.size(); ++i)
            CHECK(env.value(eps[i]) == Approx(oracle[i]).margin(1e-12));
        // The chord between the wells at +-0.1 is the zero segment, so the
        // derived tension plateaus at zero there.
        CHECK(env.value(0.0) == Approx(0.0).margin(1e-15));
        CHECK(env.derivative(-0.05) == Approx(0.0).margin(1e-12));
        CHECK(env.derivative(0.05) == Approx(0.0).margin(1e-12));
    }

    SECTION("collinear samples are their own envelope") {
        const EnergyDensity env = convexify({{0.0, 1.0, 2.0}, {0.0, 1.0, 2.0}});
        CHECK(env.value(0.0) == 0.0);
        CHECK(env.value(1.0) == Approx(1.0).epsilon(1e-15));
        CHECK(env.value(2.0) == 2.0);
    }

    SECTION("validation") {
        CHECK_THROWS_AS(convexify({{0.0, 0.1}, {0.0, 0.1}}), InvalidSamples);
        CHECK_THROWS_AS(convexify({{0.0, 0.2, 0.1}, {0.0, 0.1, 0.2}}), InvalidSamples);
        CHECK_THROWS_AS(convexify({{0.0, 0.1, 0.2}, {0.0, -0.1, 0.2}}), InvalidSamples);
    }
}

TEST_CASE("convexify invariants on random samples") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> eps, w;
        double e = 0.0;
        const int n = 5 + static_cast<int>(u(rng) * 30);
        for (int i = 0; i < n; ++i) {
            e += 0.01 + u(rng) * 0.02;
            eps.push_back(e);
            w.push_back(u(rng) * 100.0);
        }
        const EnergyDensity env = convexify({eps, w});
        const auto oracle = test_support::brute_force_envelope(eps, w);
        double prev_slope = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < eps.size(); ++i) {
            const double v = env.value(eps[i]);
            CHECK(v <= w[i] + 1e-12);                        // never above the input
            CHECK(v == Approx(oracle[i]).margin(1e-10));     // equals the brute force
            if (i > 0) {
                const double slope = (v - env.value(eps[i - 1])) / (eps[i] - eps[i - 1]);
                CHECK(slope >= prev_slope - 1e-9);           // convex output
                prev_slope = slope;
            }
        }
    }
}

TEST_CASE("hysteresis: construction and branch order") {
    const TensionCurve load({0.0, 0.01, 1.0}, {0.0, 4704.0, 4704.0});
    const TensionCurve unload({0.0, 0.01, 1.0}, {0.0, 900.0, 900.0});
    CHECK_NOTHROW(make_hysteresis(load, unload));
    CHECK_THROWS_AS(make_hysteresis(unload, load), BranchOrderViolation);
    // Crossing beyond the last knot is caught by the slope comparison: the
    // plateaued loading curve is eventually overtaken by the rising
    // unloading curve.
    CHECK_THROWS_AS(
        make_hysteresis(TensionCurve({0.0, 0.1, 0.2}, {0.0, 1000.0, 1000.0}),
                        TensionCurve({0.0, 0.2}, {0.0, 900.0})),
        BranchOrderViolation);
}

TEST_CASE("hysteresis: degenerate loop behaves elastically") {
    const TensionCurve curve = two_knot_linear();
    HysteresisLaw law = make_hysteresis(curve, curve);
    CHECK(law.loop_area(0.1) == 0.0);
    for (double e : {0.02, 0.05, 0.08, 0.05, 0.02, 0.06, 0.0}) {
        const double b = law.advance(e);
        CHECK(b == Approx(curve.tension(e)).epsilon(1e-12));
    }
    CHECK(law.dissipated_per_length() == 0.0);
}

TEST_CASE("hysteresis: full loop dissipates the loop area") {
    // Plateau pair built with a narrow ramp so the enclosed area is
    // (4704 - 900) * 0.1 per unit length: 3804 J on a 10 m rope.
    const double ramp = 1e-8;
    const Scenario s = reference_scenario();
    const TensionCurve load = ideal_plateau_law(s, ramp);
    const TensionCurve unload({0.0, ramp, 1.0 + ramp}, {0.0, 900.0, 900.0});
    HysteresisLaw law = make_hysteresis(load, unload);

    const double eps_star = 0.1;
    const int steps = 500;
    for (int i = 1; i <= steps; ++i) law.advance(eps_star * i / steps);
    CHECK(law.dissipated_per_length() == 0.0);  // no reversal yet
    for (int i = steps - 1; i >= 0; --i) law.advance(eps_star * i / steps);

    const double rope_length = 10.0;
    const double dissipated = rope_length * law.dissipated_per_length();
    CHECK(dissipated == Approx(3804.0).epsilon(1e-6));

    // Independent knot-aligned quadrature of the enclosed area.
    std::vector<double> knots = load.strains();
    knots.insert(knots.end(), unload.strains().begin(), unload.strains().end());
    const double oracle =
        rope_length * test_support::aligned_trapezoid(
                          [&](double e) { return load.tension(e) - unload.tension(e); },
                          0.0, eps_star, knots);
    CHECK(dissipated == Approx(oracle).epsilon(1e-9));
}

TEST_CASE("hysteresis: monotone history dissipates nothing") {
    const Scenario s = reference_scenario();
    HysteresisLaw law = make_hysteresis(
        ideal_plateau_law(s), TensionCurve({0.0, 1e-4, 1.0}, {0.0, 900.0, 900.0}));
    for (int i = 1; i <= 1000; ++i) law.advance(0.2 * i / 1000.0);
    CHECK(law.dissipated_per_length() == 0.0);
}

TEST_CASE("hysteresis: partial reversals dissipate the traversed sub-areas") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const TensionCurve load = test_support::random_tension_curve(rng, 5, 0.2, 4000.0);
        // A scaled-down copy of the loading curve keeps the branch order.
        std::vector<double> unload_b = load.tensions();
        for (double& b : unload_b) b *= 0.3;
        const TensionCurve unload(load.strains(), unload_b);
        HysteresisLaw law = make_hysteresis(load, unload);

        auto area = [&](double lo, double hi) {
            std::vector<double> knots = load.strains();
            return test_support::aligned_trapezoid(
                [&](double e) { return load.tension(e) - unload.tension(e); }, lo, hi,
                knots);
        };

        // History 0 -> 0.15 -> 0.04 -> 0.1 -> 0.01: two descents.
        const std::vector<std::pair<double, double>> legs = {
            {0.0, 0.15}, {0.15, 0.04}, {0.04, 0.1}, {0.1, 0.01}};
        for (const auto& [from, to] : legs) {
            const int steps = 200;
            for (int i = 1; i <= steps; ++i) law.advance(from + (to - from) * i / steps);
        }
        const double expected = area(0.04, 0.15) + area(0.01, 0.1);
        CHECK(law.dissipated_per_length() == Approx(expected).epsilon(1e-9).margin(1e-12));
    }
}

TEST_CASE("hysteresis: closed excursion equals the geometric loop area") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.02, 0.2);
    for (int trial = 0; trial < 50; ++trial) {
        const TensionCurve load = test_support::random_tension_curve(rng, 6, 0.25, 3000.0);
        std::vector<double> unload_b = load.tensions();
        for (double& b : unload_b) b *= 0.5;
        const TensionCurve unload(load.strains(), unload_b);
        HysteresisLaw law = make_hysteresis(load, unload);

        const double eps_star = u(rng);
        const int steps = 400;
        for (int i = 1; i <= steps; ++i) law.advance(eps_star * i / steps);
        for (int i = steps - 1; i >= 0; --i) law.advance(eps_star * i / steps);

        std::vector<double> knots = load.strains();
        const double oracle = test_support::aligned_trapezoid(
            [&](double e) { return load.tension(e) - unload.tension(e); }, 0.0, eps_star,
            knots);
        CHECK(law.dissipated_per_length() ==
              Approx(oracle).epsilon(1e-9).margin(1e-12));
    }
}
