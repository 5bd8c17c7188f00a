// Copyright 2026 The ropesim authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <string>

#include "ropesim/errors.hpp"

namespace ropesim {

/// Physical data of a climber fall on a single rope segment.
///
/// The coordinate axis points downwards with the anchor at x = 0.  The rope
/// of unstretched length `rope_length` is fixed to the anchor and to the
/// climber, who starts at coordinate `initial_depth` (negative if above the
/// anchor).  `max_stretch` is the largest admissible elongation of the rope;
/// the climber must come to rest before x = rope_length + max_stretch.
///
/// All quantities are SI: kg, m, s, N.  Strains are dimensionless.
struct Scenario {
    double mass = 80.0;          // climber mass [kg]
    double gravity = 9.8;        // gravitational acceleration [m/s^2]
    double rope_length = 10.0;   // unstretched rope length L [m]
    double max_stretch = 1.0;    // maximal admissible elongation [m]
    double initial_depth = 5.0;  // climber start coordinate h0 [m]

    void validate() const {
        auto fail = [](const std::string& what) { throw InvalidScenario(what); };
        if (!(mass > 0.0) || !std::isfinite(mass)) fail("scenario: mass must be > 0");
        if (!(gravity > 0.0) || !std::isfinite(gravity)) fail("scenario: gravity must be > 0");
        if (!(rope_length > 0.0) || !std::isfinite(rope_length))
            fail("scenario: rope_length must be > 0");
        if (!(max_stretch > 0.0) || !std::isfinite(max_stretch))
            fail("scenario: max_stretch must be > 0");
        if (!std::isfinite(initial_depth) || std::abs(initial_depth) > rope_length)
            fail("scenario: |initial_depth| must not exceed rope_length");
    }
};

/// Fall scenario with the rope routed through a carabiner.
///
/// The reformulated geometry is vertical: the rope is fixed at x = 0, runs
/// through the carabiner at x = upper_length, and the climber hangs at the
/// end of the lower segment, taut at x = upper_length + lower_length.  The
/// tension below the carabiner is b; above it is reduced to mu * b, with
/// mu either given directly or derived from the wrap geometry via the
/// capstan equation.
struct CarabinerScenario {
    double mass = 80.0;
    double gravity = 9.8;
    double upper_length = 4.0;   // anchor-to-carabiner unstretched length L1 [m]
    double lower_length = 6.0;   // carabiner-to-climber unstretched length L2 [m]
    double max_stretch = 1.0;    // budget for the total elongation [m]
    double initial_depth = 2.0;  // climber start coordinate h0 [m]
    double belay_angle = 1.5707963267948966;  // rope-to-vertical angle alpha [rad]
    double friction = 0.2;       // rope-carabiner friction coefficient k
    double mu_override = -1.0;   // if >= 0, use this tension ratio instead of (alpha, k)

    double total_length() const { return upper_length + lower_length; }

    void validate() const;

    /// Tension ratio across the carabiner, in (0, 1].
    double tension_ratio() const;
};

/// Velocity of the climber at the instant the rope becomes taut,
/// sqrt(2 g (L - h0)).
inline double initial_velocity(const Scenario& s) {
    s.validate();
    return std::sqrt(2.0 * s.gravity * (s.rope_length - s.initial_depth));
}

/// The provable lower bound on the peak tension for any rope that arrests
/// the fall within the stretch budget: b0 = m g (L + dL - h0) / dL.  A rope
/// attaining it holds the tension constant during arrest.
inline double min_peak_tension(const Scenario& s) {
    s.validate();
    return s.mass * s.gravity *
           (s.rope_length + s.max_stretch - s.initial_depth) / s.max_stretch;
}

/// Constant acceleration a0 = g (h0 - L) / dL developed by the ideal rope
/// (non-positive: a deceleration).
inline double ideal_acceleration(const Scenario& s) {
    s.validate();
    return s.gravity * (s.initial_depth - s.rope_length) / s.max_stretch;
}

/// Tension ratio across a frictional carabiner, mu = exp(-(pi - alpha) k)
/// (the Euler-Eytelwein relation).  alpha in [0, pi), k >= 0.
inline double capstan_ratio(double belay_angle, double friction) {
    constexpr double pi = 3.14159265358979323846;
    if (!(belay_angle >= 0.0) || !(belay_angle < pi))
        throw InvalidAngle("capstan: belay angle must lie in [0, pi)");
    if (!(friction >= 0.0) || !std::isfinite(friction))
        throw InvalidAngle("capstan: friction coefficient must be >= 0");
    return std::exp(-(pi - belay_angle) * friction);
}

inline void CarabinerScenario::validate() const {
    auto fail = [](const std::string& what) { throw InvalidScenario(what); };
    if (!(mass > 0.0) || !std::isfinite(mass)) fail("carabiner scenario: mass must be > 0");
    if (!(gravity > 0.0) || !std::isfinite(gravity))
        fail("carabiner scenario: gravity must be > 0");
    if (!(upper_length > 0.0) || !(lower_length > 0.0))
        fail("carabiner scenario: segment lengths must be > 0");
    if (!(max_stretch > 0.0)) fail("carabiner scenario: max_stretch must be > 0");
    if (!std::isfinite(initial_depth) || std::abs(initial_depth) > total_length())
        fail("carabiner scenario: |initial_depth| must not exceed L1 + L2");
    if (mu_override >= 0.0) {
        if (!(mu_override > 0.0) || !(mu_override <= 1.0))
            fail("carabiner scenario: mu must lie in (0, 1]");
    } else {
        capstan_ratio(belay_angle, friction);  // throws InvalidAngle on bad inputs
    }
}

inline double CarabinerScenario::tension_ratio() const {
    if (mu_override >= 0.0) return mu_override;
    return capstan_ratio(belay_angle, friction);
}

/// Velocity at the instant the rope becomes taut in the carabiner geometry,
/// sqrt(2 g (L1 + L2 - h0)).
inline double initial_velocity(const CarabinerScenario& cs) {
    cs.validate();
    return std::sqrt(2.0 * cs.gravity * (cs.total_length() - cs.initial_depth));
}

/// Single-rope problem equivalent to the carabiner problem when the upper
/// segment develops no stretch: rope of length L2 anchored at the carabiner,
/// same drop height.  Throws InvalidScenario if |h0 - L1| > L2.
inline Scenario equivalent_lower_scenario(const CarabinerScenario& cs) {
    cs.validate();
    Scenario s;
    s.mass = cs.mass;
    s.gravity = cs.gravity;
    s.rope_length = cs.lower_length;
    s.max_stretch = cs.max_stretch;
    s.initial_depth = cs.initial_depth - cs.upper_length;
    s.validate();
    return s;
}

} // namespace ropesim
