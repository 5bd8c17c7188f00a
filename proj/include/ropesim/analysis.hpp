// Copyright 2026 The ropesim authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ropesim/dynamics.hpp"
#include "ropesim/energy_density.hpp"
#include "ropesim/errors.hpp"
#include "ropesim/scenario.hpp"

namespace ropesim {

/// State of the climber end under the ideal (constant-deceleration) rope.
struct ClosedFormState {
    double y = 0.0;  // position of the rope end [m]
    double v = 0.0;  // velocity [m/s]
};

/// Duration of the first stretch phase under the ideal rope, T = -v0/a0
/// (zero when the climber starts taut at rest).
inline double ideal_arrest_time(const Scenario& s) {
    const double a0 = ideal_acceleration(s);
    if (a0 == 0.0) return 0.0;
    return -initial_velocity(s) / a0;
}

/// Closed-form climber-end trajectory of the ideal rope during the first
/// stretch phase: y = a0 t^2/2 + v0 t + L, v = a0 t + v0, valid on [0, T].
inline ClosedFormState closed_form_trajectory(const Scenario& s, double t) {
    const double v0 = initial_velocity(s);
    const double a0 = ideal_acceleration(s);
    const double T = ideal_arrest_time(s);
    if (!(t >= 0.0) || t > T * (1.0 + 1e-12))
        throw OutsideIdealWindow("closed form valid only on [0, " + std::to_string(T) +
                                 "] s, got t = " + std::to_string(t));
    return {0.5 * a0 * t * t + v0 * t + s.rope_length, a0 * t + v0};
}

/// Homogeneous-deformation variant: position of the rope point with
/// undeformed coordinate x, y(x, t) = (x/L) y(L, t).
inline double closed_form_position(const Scenario& s, double x, double t) {
    return x / s.rope_length * closed_form_trajectory(s, t).y;
}

/// Jensen gap of a convex energy density over a strain profile on [0, L]:
///   integral of W(profile) - L * W(mean strain)  >=  0,
/// with equality iff the profile is constant when W is strictly convex.
/// Mean and integral share one positive-weight quadrature rule, so the
/// discrete value inherits the inequality up to rounding.
inline double jensen_gap(const EnergyDensity& w,
                         const std::function<double(double)>& strain_profile,
                         const Scenario& s, std::size_t intervals = 512) {
    s.validate();
    if (intervals < 2) intervals = 2;
    if (intervals % 2 == 1) ++intervals;  // composite Simpson needs an even count
    const double L = s.rope_length;
    const double h = L / static_cast<double>(intervals);

    std::vector<double> p(intervals + 1), weight(intervals + 1);
    long double mean = 0.0L;
    long double weight_sum = 0.0L;
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double x = (i == intervals) ? L : h * static_cast<double>(i);
        weight[i] = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        p[i] = strain_profile(x);
        mean += static_cast<long double>(weight[i]) * p[i];
        weight_sum += weight[i];
    }
    mean /= weight_sum;

    // Summing W(p) - W(mean) directly keeps rounding at the scale of the
    // quadrature weights rather than of the whole integral, which preserves
    // the discrete Jensen inequality down to ~1e-13 relative.
    const double w_mean = w.value(static_cast<double>(mean));
    long double gap = 0.0L;
    for (std::size_t i = 0; i <= intervals; ++i)
        gap += static_cast<long double>(weight[i]) *
               (static_cast<long double>(w.value(p[i])) - w_mean);
    gap *= static_cast<long double>(h) / 3.0L;
    return static_cast<double>(gap);
}

/// Aggregated outcome of one simulated fall.
struct FallReport {
    double peak_tension = 0.0;              // max climber-end tension [N]
    double bound_b0 = 0.0;                  // provable lower bound b0 [N]
    double optimality_gap = 0.0;            // peak / b0 - 1
    double max_elongation = 0.0;            // [m]
    double arrest_time = 0.0;               // first velocity zero after taut [s]
    std::optional<double> rest_position;    // [m], hysteretic runs that rest
    double energy_dissipated = 0.0;         // [J]
    std::optional<double> max_upper_strain; // carabiner runs
};

/// Builds the report of a trajectory against its scenario.  Throws NoArrest
/// when the trajectory is empty or the velocity never crossed zero after
/// the rope got taut.
inline FallReport make_report(const Trajectory& traj, const Scenario& s) {
    if (traj.samples.empty())
        throw NoArrest("report: empty trajectory");
    if (!traj.arrest_time)
        throw NoArrest("report: velocity never reached zero within the simulated window");
    FallReport r;
    r.peak_tension = traj.peak_tension;
    r.bound_b0 = min_peak_tension(s);
    r.optimality_gap = r.peak_tension / r.bound_b0 - 1.0;
    r.max_elongation = traj.max_elongation;
    r.arrest_time = *traj.arrest_time;
    r.rest_position = traj.rest_position;
    r.energy_dissipated = traj.energy_dissipated;
    if (traj.carabiner) r.max_upper_strain = traj.max_upper_strain;
    return r;
}

} // namespace ropesim
