// Copyright 2026 The ropesim authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ropesim/analysis.hpp"
#include "ropesim/dynamics.hpp"
#include "ropesim/errors.hpp"
#include "ropesim/scenario.hpp"
#include "ropesim/tension_curve.hpp"

namespace ropesim {

enum class GridKind {
    Geometric,  // log-spaced knots, resolves the plateau onset near zero strain
    Uniform,    // evenly spaced knots on (0, dL/L]
};

/// Search space: tensions at fixed strain knots, parameterized by
/// non-negative increments so monotonicity holds by construction.
struct LawParameterization {
    std::vector<double> grid;  // strictly increasing strains on (0, dL/L]

    static LawParameterization make(const Scenario& s, int n_knots, GridKind kind,
                                    double ramp_fraction = 1e-3) {
        s.validate();
        if (n_knots < 2) throw Error("law grid: needs at least 2 knots");
        const double eps_max = s.max_stretch / s.rope_length;
        LawParameterization p;
        p.grid.resize(static_cast<std::size_t>(n_knots));
        if (kind == GridKind::Uniform) {
            for (int i = 0; i < n_knots; ++i)
                p.grid[static_cast<std::size_t>(i)] =
                    eps_max * static_cast<double>(i + 1) / static_cast<double>(n_knots);
        } else {
            const double ratio = std::pow(ramp_fraction, 1.0 / static_cast<double>(n_knots - 1));
            for (int i = 0; i < n_knots; ++i)
                p.grid[static_cast<std::size_t>(i)] =
                    eps_max * std::pow(ratio, static_cast<double>(n_knots - 1 - i));
        }
        return p;
    }

    /// Curve with tension cumsum(increments) at the grid knots.
    TensionCurve curve(const std::vector<double>& increments) const {
        std::vector<double> eps{0.0};
        std::vector<double> b{0.0};
        eps.insert(eps.end(), grid.begin(), grid.end());
        double acc = 0.0;
        for (double d : increments) {
            acc += std::max(0.0, d);
            b.push_back(acc);
        }
        return TensionCurve(std::move(eps), std::move(b));
    }
};

struct OptimizeOptions {
    int n_knots = 8;
    long budget = 5000;      // simulation evaluations
    std::uint64_t seed = 0;  // jitters the starting law; fixed seed, fixed result
    GridKind grid = GridKind::Geometric;
    IntegratorConfig sim;    // integrator used inside the search
    double penalty_weight = 100.0;

    OptimizeOptions() {
        sim.step = 1e-4;
        sim.max_time = 5.0;
        sim.record_stride = 1u << 20;  // aggregates only; samples are not needed
    }
};

struct OptimizationResult {
    TensionCurve law{{0.0, 1.0}, {0.0, 0.0}};
    double peak_tension = 0.0;
    double constraint_residual = 0.0;  // max(0, elongation - dL) of the best law [m]
    long iterations = 0;               // completed poll sweeps
    long evaluations = 0;
    std::vector<double> objective_history;  // incumbent after each sweep
    bool feasible = false;
};

/// Certificate of a candidate law against the peak-force bound.
struct OptimalityCertificate {
    double gap = 0.0;                // peak / b0 - 1
    double plateau_deviation = 0.0;  // max |b(eps)/b0 - 1| on the middle strain range
};

namespace detail {

struct DesignObjective {
    const Scenario& s;
    const LawParameterization& param;
    const OptimizeOptions& opts;
    double b0;
    long evaluations = 0;

    struct Outcome {
        double objective = std::numeric_limits<double>::infinity();
        double peak = 0.0;
        double residual = 0.0;
        bool arrested = false;
    };

    Outcome operator()(const std::vector<double>& increments) {
        ++evaluations;
        Outcome out;
        IntegratorConfig cfg = opts.sim;
        cfg.elongation_tol = 10.0 * s.max_stretch;  // measure overshoot, penalize it
        Trajectory traj;
        try {
            traj = simulate_fall(s, param.curve(increments), cfg);
        } catch (const SimulationError&) {
            return out;  // runaway elongation: hard reject
        }
        if (!traj.arrest_time) return out;  // never arrested: hard reject
        out.arrested = true;
        out.peak = traj.peak_tension;
        out.residual = std::max(0.0, traj.max_elongation - s.max_stretch);
        const double rel = out.residual / s.max_stretch;
        out.objective = out.peak + opts.penalty_weight * rel * rel * b0;

        // Feasible laws can never beat the bound; going below it means the
        // simulator miscounted, not that a better rope exists.
        if (out.residual == 0.0 && out.peak < b0 * (1.0 - 1e-3)) {
            std::ostringstream msg;
            msg << "design: simulated peak " << out.peak
                << " N undercuts the provable bound " << b0 << " N; tensions:";
            for (double d : increments) msg << ' ' << d;
            throw std::logic_error(msg.str());
        }
        return out;
    }
};

} // namespace detail

/// Searches monotone piecewise-linear laws for minimal simulated peak
/// tension subject to the elongation budget: coordinate-wise pattern search
/// over the tension increments with multiplicative step adaptation.
/// Deterministic for a fixed (scenario, knots, budget, seed).
inline OptimizationResult optimize_law(const Scenario& s, const OptimizeOptions& opts = {}) {
    s.validate();
    if (opts.n_knots < 2) throw Error("optimize: n_knots must be >= 2");
    if (opts.budget < 100) throw Error("optimize: budget must be >= 100");

    const auto param = LawParameterization::make(s, opts.n_knots, opts.grid);
    const double b0 = min_peak_tension(s);
    const std::size_t n = param.grid.size();

    detail::DesignObjective objective{s, param, opts, b0};

    // Start from a jittered near-linear law with comfortable energy margin.
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> jitter(0.8, 1.2);
    std::vector<double> inc(n);
    for (double& d : inc) d = 2.2 * b0 / static_cast<double>(n) * jitter(rng);

    auto best = objective(inc);
    if (!best.arrested) {
        // Escalate stiffness a few times before giving up.
        for (int k = 0; k < 6 && !best.arrested; ++k) {
            for (double& d : inc) d *= 2.0;
            best = objective(inc);
        }
        if (!best.arrested)
            throw Infeasible("optimize: no sampled law arrests within the stretch budget");
    }

    OptimizationResult result;
    result.objective_history.push_back(best.objective);

    std::vector<double> step(n);
    for (std::size_t i = 0; i < n; ++i) step[i] = 0.25 * inc[i] + 0.02 * b0;
    const double step_floor = 1e-9 * b0;

    long sweeps = 0;
    while (objective.evaluations + 2 <= opts.budget) {
        bool improved_any = false;
        for (std::size_t i = 0; i < n && objective.evaluations + 2 <= opts.budget; ++i) {
            bool improved_coord = false;
            for (const double dir : {+1.0, -1.0}) {
                std::vector<double> trial = inc;
                trial[i] = std::max(0.0, trial[i] + dir * step[i]);
                if (trial[i] == inc[i]) continue;
                const auto out = objective(trial);
                if (out.objective < best.objective) {
                    best = out;
                    inc = std::move(trial);
                    improved_coord = true;
                    break;
                }
            }
            if (improved_coord) {
                step[i] = std::min(step[i] * 2.0, b0);
                improved_any = true;
            } else {
                step[i] = std::max(step[i] * 0.5, step_floor);
            }
        }
        ++sweeps;
        result.objective_history.push_back(best.objective);
        if (!improved_any && *std::max_element(step.begin(), step.end()) <= step_floor)
            break;
    }

    result.law = param.curve(inc);
    result.peak_tension = best.peak;
    result.constraint_residual = best.residual;
    result.iterations = sweeps;
    result.evaluations = objective.evaluations;
    result.feasible = best.arrested && best.residual == 0.0;
    return result;
}

/// Evaluates a law against the bound: simulates the fall, requires arrest
/// within the stretch budget, and reports the peak gap plus the law's
/// deviation from a flat plateau over the middle 80% of the strain range.
inline OptimalityCertificate optimality_certificate(const TensionCurve& law,
                                                    const Scenario& s,
                                                    const IntegratorConfig& cfg = {}) {
    s.validate();
    Trajectory traj;
    try {
        traj = simulate_fall(s, law, cfg);
    } catch (const SimulationError& err) {
        throw NotArresting(std::string("certificate: ") + err.what());
    }
    if (!traj.arrest_time)
        throw NotArresting("certificate: law never arrests the fall");
    if (traj.max_elongation > s.max_stretch * (1.0 + 1e-6) + 1e-12)
        throw NotArresting("certificate: arrest needs elongation " +
                           std::to_string(traj.max_elongation) + " m, budget is " +
                           std::to_string(s.max_stretch) + " m");

    const double b0 = min_peak_tension(s);
    OptimalityCertificate cert;
    cert.gap = traj.peak_tension / b0 - 1.0;
    const double eps_max = s.max_stretch / s.rope_length;
    const int probes = 1000;
    for (int i = 0; i <= probes; ++i) {
        const double eps =
            eps_max * (0.1 + 0.8 * static_cast<double>(i) / static_cast<double>(probes));
        cert.plateau_deviation =
            std::max(cert.plateau_deviation, std::abs(law.tension(eps) / b0 - 1.0));
    }
    return cert;
}

} // namespace ropesim
