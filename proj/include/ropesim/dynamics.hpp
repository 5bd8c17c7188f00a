// Copyright 2026 The ropesim authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ropesim/energy_density.hpp"
#include "ropesim/errors.hpp"
#include "ropesim/hysteresis.hpp"
#include "ropesim/scenario.hpp"
#include "ropesim/tension_curve.hpp"

namespace ropesim {

/// Fixed-step RK4 with bisection event refinement.  Events (taut/slack
/// boundary, turning points, law knot crossings) split the step so the
/// right-hand side stays smooth inside every accepted sub-step; narrow law
/// segments (e.g. the plateau onset ramp) are additionally resolved by a
/// local step limit.
struct IntegratorConfig {
    double step = 1e-5;              // base time step [s]
    double event_tol = 1e-12;        // event localization tolerance [s]
    double max_time = 10.0;          // simulation horizon [s]
    double energy_tol = 1e-6;        // relative energy drift budget
    double elongation_tol = 1e-2;    // slack beyond L + dL before failing [m]
    double rest_kinetic_tol = 1e-6;  // kinetic energy under which motion counts as rest [J]
    std::size_t record_stride = 0;   // record every k-th grid step; 0 = choose automatically

    void validate() const {
        auto fail = [](const std::string& what) { throw Error(what); };
        if (!(step > 0.0)) fail("integrator: step must be > 0");
        if (!(event_tol > 0.0) || !(event_tol < step))
            fail("integrator: event tolerance must lie in (0, step)");
        if (!(max_time > 0.0)) fail("integrator: max_time must be > 0");
        if (!(energy_tol > 0.0)) fail("integrator: energy_tol must be > 0");
        if (!(elongation_tol >= 0.0)) fail("integrator: elongation_tol must be >= 0");
        if (!(rest_kinetic_tol >= 0.0)) fail("integrator: rest_kinetic_tol must be >= 0");
    }
};

enum class EventKind { None, Taut, Slack, Turn, Rest };

inline const char* to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Taut: return "taut";
        case EventKind::Slack: return "slack";
        case EventKind::Turn: return "turn";
        case EventKind::Rest: return "rest";
        default: return "";
    }
}

struct TrajectorySample {
    double t = 0.0;
    double y = 0.0;        // climber position [m]
    double v = 0.0;        // climber velocity [m/s], positive downwards
    double strain = 0.0;   // climber-segment strain (negative while slack)
    double tension = 0.0;  // climber-end tension [N]
    double e_kin = 0.0;
    double e_grav = 0.0;
    double e_el = 0.0;
    double e_diss = 0.0;
    EventKind event = EventKind::None;
};

/// Simulated fall history: uniform-in-time samples plus event samples, and
/// running aggregates tracked at every accepted integrator step (so they do
/// not depend on the recording stride).
struct Trajectory {
    std::vector<TrajectorySample> samples;

    Scenario scenario;     // single-rope view (total length for carabiner runs)
    std::string law_label;
    IntegratorConfig config;
    bool carabiner = false;
    double capstan = 1.0;  // tension ratio mu for carabiner runs

    double peak_tension = 0.0;
    double max_elongation = 0.0;
    double max_upper_strain = 0.0;  // carabiner runs only
    std::optional<double> arrest_time;
    std::optional<double> rest_position;
    double energy_dissipated = 0.0;
};

/// Base of simulation failures; carries the partial trajectory up to the
/// failing step so the caller can inspect what happened.
class SimulationError : public Error {
public:
    SimulationError(const std::string& what, Trajectory partial_trajectory)
        : Error(what), partial(std::move(partial_trajectory)) {}
    Trajectory partial;
};

/// The climber passed L + dL + tol without arresting.
class ElongationExceeded : public SimulationError {
public:
    using SimulationError::SimulationError;
};

/// Energy drift exceeded 100x the configured tolerance.
class StepTooLarge : public SimulationError {
public:
    using SimulationError::SimulationError;
};

/// A cycle simulation hit the horizon without reaching rest.
class NoRest : public SimulationError {
public:
    using SimulationError::SimulationError;
};

/// Result of the quasi-static two-segment carabiner solve.
struct SegmentSolution {
    double tension = 0.0;       // climber-side tension b [N]
    double upper_strain = 0.0;  // strain above the carabiner (tension mu*b)
    double lower_strain = 0.0;  // strain below the carabiner (tension b)
};

/// Solves the massless two-segment equilibrium: the smallest b >= 0 whose
/// total elongation L1*eps(mu*b) + L2*eps(b) reaches the climber
/// displacement d, with eps the generalized inverse of the law.  On a
/// tension plateau the residual displacement goes into the lower segment.
inline SegmentSolution solve_segment_tension(const TensionCurve& law, double mu,
                                             double upper_length, double lower_length,
                                             double displacement,
                                             double strain_cap = 1e3) {
    if (!(mu > 0.0) || !(mu <= 1.0))
        throw Error("segment solve: tension ratio must lie in (0, 1]");
    if (!(upper_length > 0.0) || !(lower_length > 0.0))
        throw Error("segment solve: segment lengths must be > 0");
    if (!(displacement >= 0.0))
        throw Error("segment solve: displacement must be >= 0");
    if (displacement == 0.0) return {};
    if (displacement > (upper_length + lower_length) * strain_cap)
        throw NoEquilibrium("segment solve: displacement " + std::to_string(displacement) +
                            " beyond extrapolation cap");

    auto reach = [&](double b) {
        const double up = law.strain_reachable_at(mu * b);
        const double low = law.strain_reachable_at(b);
        return upper_length * up + lower_length * low;  // may be +inf
    };

    double hi = std::max(law.tension(displacement / (upper_length + lower_length)), 1.0);
    while (reach(hi) < displacement) {
        hi *= 2.0;
        if (hi > 1e30)
            throw NoEquilibrium("segment solve: displacement unreachable");
    }
    double lo = 0.0;
    for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (reach(mid) >= displacement)
            hi = mid;
        else
            lo = mid;
    }

    SegmentSolution sol;
    sol.tension = hi;
    const double upper_tension = std::min(mu * hi, law.max_tension());
    sol.upper_strain = law.strain_of_tension(upper_tension);
    sol.lower_strain =
        std::max(0.0, (displacement - upper_length * sol.upper_strain) / lower_length);
    return sol;
}

/// Energy bookkeeping of one state: kinetic, gravitational (zero at the
/// anchor, axis pointing down), stored elastic, dissipated.
struct EnergyLedger {
    double kinetic = 0.0;
    double gravitational = 0.0;
    double elastic = 0.0;
    double dissipated = 0.0;
    double total() const { return kinetic + gravitational + elastic + dissipated; }
};

namespace detail {

struct State {
    double y = 0.0;
    double v = 0.0;
};

inline std::vector<double> positive_knots(const TensionCurve& curve) {
    return {curve.strains().begin() + 1, curve.strains().end()};
}

struct SingleRopeElastic {
    const Scenario& s;
    const TensionCurve& law;
    EnergyDensity energy;
    std::vector<double> knots;

    SingleRopeElastic(const Scenario& sc, const TensionCurve& l)
        : s(sc), law(l), energy(EnergyDensity::from_tension_curve(l)),
          knots(positive_knots(l)) {}

    static constexpr bool hysteretic = false;
    double mass() const { return s.mass; }
    double gravity() const { return s.gravity; }
    double taut_position() const { return s.rope_length; }
    double strain_length_scale() const { return s.rope_length; }
    double strain_at(double y) const { return y / s.rope_length - 1.0; }
    double position_at_strain(double eps) const { return s.rope_length * (1.0 + eps); }
    double tension_at(double y) const { return law.tension(strain_at(y)); }
    double stored_energy(double y) const {
        return s.rope_length * energy.value(strain_at(y));
    }
    double dissipated() const { return 0.0; }
    double upper_strain_at(double) const { return 0.0; }
    void commit(double) {}
    bool resolve_turn(double, double) { return false; }
    const std::vector<double>& knot_strains() const { return knots; }
};

struct SingleRopeHysteretic {
    const Scenario& s;
    HysteresisLaw law;  // private copy advanced along this run
    std::vector<double> knots;

    SingleRopeHysteretic(const Scenario& sc, HysteresisLaw l) : s(sc), law(std::move(l)) {
        law.reset();
        knots = positive_knots(law.loading());
        const auto u = positive_knots(law.unloading());
        knots.insert(knots.end(), u.begin(), u.end());
        std::sort(knots.begin(), knots.end());
        knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    }

    static constexpr bool hysteretic = true;
    double mass() const { return s.mass; }
    double gravity() const { return s.gravity; }
    double taut_position() const { return s.rope_length; }
    double strain_length_scale() const { return s.rope_length; }
    double strain_at(double y) const { return y / s.rope_length - 1.0; }
    double position_at_strain(double eps) const { return s.rope_length * (1.0 + eps); }
    double tension_at(double y) const { return law.tension(strain_at(y)); }
    double stored_energy(double y) const {
        return s.rope_length * law.stored_energy_per_length(strain_at(y));
    }
    double dissipated() const { return s.rope_length * law.dissipated_per_length(); }
    double upper_strain_at(double) const { return 0.0; }
    void commit(double y) { law.commit(strain_at(y)); }

    // At a turning point the tension may take any value between the
    // branches.  Returns true when the weight is statically admissible
    // there (the rest condition); otherwise pre-selects the branch the
    // imminent motion will ride.
    bool resolve_turn(double y, double weight) {
        const double eps = strain_at(y);
        const double lo = law.unloading().tension(eps);
        const double hi = law.loading().tension(eps);
        if (eps > 0.0 && lo <= weight && weight <= hi) return true;
        law.force_branch(weight < lo ? HysteresisLaw::Branch::Unloading
                                     : HysteresisLaw::Branch::Reloading);
        return false;
    }
    const std::vector<double>& knot_strains() const { return knots; }
};

struct CarabinerElastic {
    const CarabinerScenario& cs;
    const TensionCurve& law;
    EnergyDensity energy;
    double mu;
    std::vector<double> knots;
    // One-entry cache: the solve is queried repeatedly at identical
    // positions by RK4 stages and event probes.
    mutable double cached_y = std::numeric_limits<double>::quiet_NaN();
    mutable SegmentSolution cached_sol;

    CarabinerElastic(const CarabinerScenario& c, const TensionCurve& l)
        : cs(c), law(l), energy(EnergyDensity::from_tension_curve(l)),
          mu(c.tension_ratio()), knots(positive_knots(l)) {}

    static constexpr bool hysteretic = false;
    double mass() const { return cs.mass; }
    double gravity() const { return cs.gravity; }
    double taut_position() const { return cs.total_length(); }
    double strain_length_scale() const { return cs.lower_length; }

    const SegmentSolution& solve_at(double y) const {
        if (y != cached_y) {
            const double d = y - cs.total_length();
            cached_sol = d <= 0.0 ? SegmentSolution{}
                                  : solve_segment_tension(law, mu, cs.upper_length,
                                                          cs.lower_length, d);
            cached_y = y;
        }
        return cached_sol;
    }
    double strain_at(double y) const {
        const double d = y - cs.total_length();
        if (d <= 0.0) return d / cs.total_length();
        return solve_at(y).lower_strain;
    }
    double position_at_strain(double eps) const {
        if (eps <= 0.0) return cs.total_length() * (1.0 + eps);
        const double b_up = std::min(mu * law.tension(eps), law.max_tension());
        const double up = law.strain_of_tension(b_up);
        return cs.total_length() + cs.upper_length * up + cs.lower_length * eps;
    }
    double tension_at(double y) const { return solve_at(y).tension; }
    double stored_energy(double y) const {
        const auto& sol = solve_at(y);
        return cs.upper_length * energy.value(sol.upper_strain) +
               cs.lower_length * energy.value(sol.lower_strain);
    }
    double dissipated() const { return 0.0; }
    double upper_strain_at(double y) const { return solve_at(y).upper_strain; }
    void commit(double) {}
    bool resolve_turn(double, double) { return false; }
    const std::vector<double>& knot_strains() const { return knots; }
};

enum class StepEvent { None, Boundary, Turn, Knot };

template <class Model>
Trajectory integrate(Model& model, double v0, const IntegratorConfig& cfg,
                     const Scenario& meta, std::string law_label, bool carabiner,
                     double capstan, bool require_rest) {
    cfg.validate();
    constexpr double inf = std::numeric_limits<double>::infinity();

    Trajectory traj;
    traj.scenario = meta;
    traj.law_label = std::move(law_label);
    traj.config = cfg;
    traj.carabiner = carabiner;
    traj.capstan = capstan;

    const double m = model.mass();
    const double g = model.gravity();
    const double weight = m * g;
    const double taut = model.taut_position();
    const double eps_scale = model.strain_length_scale();
    const auto& knots = model.knot_strains();

    auto accel = [&](double y) { return g - model.tension_at(y) / m; };
    auto rk4 = [&](State st, double dt) {
        const double k1y = st.v, k1v = accel(st.y);
        const double k2y = st.v + 0.5 * dt * k1v, k2v = accel(st.y + 0.5 * dt * k1y);
        const double k3y = st.v + 0.5 * dt * k2v, k3v = accel(st.y + 0.5 * dt * k2y);
        const double k4y = st.v + dt * k3v, k4v = accel(st.y + dt * k3y);
        return State{st.y + dt / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
                     st.v + dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)};
    };

    auto ledger_at = [&](const State& st) {
        EnergyLedger e;
        e.kinetic = 0.5 * m * st.v * st.v;
        e.gravitational = -weight * st.y;
        e.elastic = model.stored_energy(st.y);
        e.dissipated = model.dissipated();
        return e;
    };
    auto record = [&](double time, const State& st, EventKind ev) {
        const EnergyLedger e = ledger_at(st);
        const TrajectorySample smp{time,      st.y,       st.v,
                                   model.strain_at(st.y), model.tension_at(st.y),
                                   e.kinetic, e.gravitational, e.elastic, e.dissipated,
                                   ev};
        if (!traj.samples.empty() && traj.samples.back().t == time) {
            if (ev != EventKind::None) traj.samples.back() = smp;
            return;
        }
        traj.samples.push_back(smp);
    };
    auto update_running = [&](const State& st) {
        traj.peak_tension = std::max(traj.peak_tension, model.tension_at(st.y));
        traj.max_elongation = std::max(traj.max_elongation, st.y - taut);
        if (carabiner)
            traj.max_upper_strain =
                std::max(traj.max_upper_strain, model.upper_strain_at(st.y));
        traj.energy_dissipated = model.dissipated();
    };

    // Time to traverse the remaining width of the current law segment at
    // the current strain rate; caps the step so narrow segments stay
    // resolved.
    auto segment_limit = [&](const State& st) {
        if (knots.empty() || st.v == 0.0) return inf;
        const double eps = model.strain_at(st.y);
        double dist;
        if (st.v > 0.0) {
            const auto it = std::upper_bound(knots.begin(), knots.end(), eps);
            if (it == knots.end()) return inf;
            dist = *it - std::max(eps, 0.0);
        } else {
            if (eps <= 0.0) return inf;  // heading deeper into slack
            const auto it = std::lower_bound(knots.begin(), knots.end(), eps);
            const double below = (it == knots.begin()) ? 0.0 : *(it - 1);
            dist = eps - below;
        }
        const double rate = std::abs(st.v) / eps_scale;
        return 0.25 * dist / rate;
    };

    auto refine = [&](const State& st, double dt, auto&& gfun) {
        double lo = 0.0, hi = dt;
        const double g0 = gfun(st);
        for (int i = 0; i < 80 && hi - lo > cfg.event_tol; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double gm = gfun(rk4(st, mid));
            if (gm == 0.0) {
                hi = mid;
                break;
            }
            (gm > 0.0) == (g0 > 0.0) ? lo = mid : hi = mid;
        }
        return hi;
    };

    State s{taut, v0};
    double t = 0.0;
    std::size_t grid_index = 0;
    const auto total_grid =
        static_cast<std::size_t>(std::ceil(cfg.max_time / cfg.step));
    std::size_t stride = cfg.record_stride;
    if (stride == 0) stride = std::max<std::size_t>(1, total_grid / 20000);

    model.commit(s.y);
    record(0.0, s, EventKind::Taut);
    update_running(s);
    const double e_total0 = ledger_at(s).total();
    const double e_scale = 0.5 * m * v0 * v0 + weight * (taut + meta.max_stretch);
    double max_kin_since_turn = 0.5 * m * v0 * v0;
    bool resting = false;

    while (!resting && t < cfg.max_time - 0.5 * cfg.event_tol) {
        const double t_grid =
            std::min(static_cast<double>(grid_index + 1) * cfg.step, cfg.max_time);
        double dt = t_grid - t;
        bool grid_step = true;
        const double lim = segment_limit(s);
        if (lim < dt) {
            dt = std::max(lim, 1e-12);
            grid_step = false;
        }
        const State trial = rk4(s, dt);

        // Earliest event inside (t, t + dt].
        double best_tau = inf;
        StepEvent ev = StepEvent::None;
        double crossed_knot = 0.0;
        double boundary_g0 = 0.0;
        {
            const double g0 = s.y - taut, g1 = trial.y - taut;
            if (g0 != 0.0 && (g0 > 0.0) != (g1 > 0.0)) {
                const double tau =
                    refine(s, dt, [&](const State& q) { return q.y - taut; });
                if (tau < best_tau) {
                    best_tau = tau;
                    ev = StepEvent::Boundary;
                    boundary_g0 = g0;
                }
            }
        }
        if (s.v != 0.0 && (s.v > 0.0) != (trial.v > 0.0)) {
            const double tau = refine(s, dt, [&](const State& q) { return q.v; });
            if (tau < best_tau) {
                best_tau = tau;
                ev = StepEvent::Turn;
            }
        }
        {
            const double e0 = model.strain_at(s.y), e1 = model.strain_at(trial.y);
            double knot = inf;
            if (e1 > e0) {
                const auto it = std::upper_bound(knots.begin(), knots.end(), e0);
                if (it != knots.end() && *it < e1) knot = *it;
            } else if (e1 < e0) {
                const auto it = std::lower_bound(knots.begin(), knots.end(), e0);
                if (it != knots.begin() && *(it - 1) > e1) knot = *(it - 1);
            }
            if (knot != inf) {
                const double tau = refine(
                    s, dt, [&](const State& q) { return model.strain_at(q.y) - knot; });
                if (tau < best_tau) {
                    best_tau = tau;
                    ev = StepEvent::Knot;
                    crossed_knot = knot;
                }
            }
        }

        if (ev != StepEvent::None) {
            State se = rk4(s, best_tau);
            if (ev == StepEvent::Boundary)
                se.y = taut;
            else if (ev == StepEvent::Turn)
                se.v = 0.0;
            else
                se.y = model.position_at_strain(crossed_knot);
            t += best_tau;
            s = se;
            model.commit(s.y);
            update_running(s);
            if (ev == StepEvent::Boundary) {
                record(t, s, boundary_g0 < 0.0 ? EventKind::Taut : EventKind::Slack);
            } else if (ev == StepEvent::Turn) {
                record(t, s, EventKind::Turn);
                if (!traj.arrest_time && s.y > taut) traj.arrest_time = t;
                if constexpr (Model::hysteretic) {
                    const bool statically_held = model.resolve_turn(s.y, weight);
                    const bool quiescent = max_kin_since_turn < cfg.rest_kinetic_tol &&
                                           model.strain_at(s.y) > 0.0;
                    if (statically_held || quiescent) {
                        traj.rest_position = s.y;
                        traj.samples.back().event = EventKind::Rest;
                        resting = true;
                    }
                }
                max_kin_since_turn = 0.0;
            }
        } else {
            t = grid_step ? t_grid : t + dt;
            s = trial;
            model.commit(s.y);
            update_running(s);
            if (grid_step) {
                ++grid_index;
                if (grid_index % stride == 0) record(t, s, EventKind::None);
            }
        }
        max_kin_since_turn = std::max(max_kin_since_turn, 0.5 * m * s.v * s.v);

        if (s.y - taut > meta.max_stretch + cfg.elongation_tol) {
            record(t, s, EventKind::None);
            throw ElongationExceeded(
                "simulation: elongation " + std::to_string(s.y - taut) +
                    " m exceeded the admissible stretch " +
                    std::to_string(meta.max_stretch) + " m",
                std::move(traj));
        }
        const double drift = std::abs(ledger_at(s).total() - e_total0);
        if (drift > 100.0 * cfg.energy_tol * e_scale) {
            record(t, s, EventKind::None);
            throw StepTooLarge("simulation: energy drift " + std::to_string(drift) +
                                   " J exceeds 100x tolerance; reduce the step",
                               std::move(traj));
        }
    }

    record(t, s, EventKind::None);
    if (require_rest && !traj.rest_position)
        throw NoRest("simulation: no rest reached within " +
                         std::to_string(cfg.max_time) + " s",
                     std::move(traj));
    return traj;
}

} // namespace detail

/// Simulates a fall on a single elastic rope: m y'' = m g - b(y/L - 1) while
/// taut, free fall while slack.  Starts at the taut point with the free-fall
/// velocity of the scenario.
inline Trajectory simulate_fall(const Scenario& s, const TensionCurve& law,
                                const IntegratorConfig& cfg = {}) {
    const double v0 = initial_velocity(s);  // validates the scenario
    detail::SingleRopeElastic model(s, law);
    return detail::integrate(model, v0, cfg, s, "elastic", false, 1.0, false);
}

/// Fall on a single hysteretic rope; stops early if the climber reaches
/// rest inside the hysteresis band.
inline Trajectory simulate_fall(const Scenario& s, const HysteresisLaw& law,
                                const IntegratorConfig& cfg = {}) {
    const double v0 = initial_velocity(s);
    detail::SingleRopeHysteretic model(s, law);
    return detail::integrate(model, v0, cfg, s, "hysteretic", false, 1.0, false);
}

/// Fall with the rope routed through a carabiner: the climber-side tension
/// comes from the quasi-static two-segment solve at each position.
inline Trajectory simulate_carabiner_fall(const CarabinerScenario& cs,
                                          const TensionCurve& law,
                                          const IntegratorConfig& cfg = {}) {
    const double v0 = initial_velocity(cs);
    detail::CarabinerElastic model(cs, law);
    Scenario meta;
    meta.mass = cs.mass;
    meta.gravity = cs.gravity;
    meta.rope_length = cs.total_length();
    meta.max_stretch = cs.max_stretch;
    meta.initial_depth = cs.initial_depth;
    return detail::integrate(model, v0, cfg, meta, "elastic", true, model.mu, false);
}

/// Integrates a hysteretic fall through stretch/retract cycles until the
/// climber rests (kinetic energy exhausted inside the static hysteresis
/// band).  Throws NoRest if the horizon ends first.
inline Trajectory simulate_cycles(const Scenario& s, const HysteresisLaw& law,
                                  const IntegratorConfig& cfg = {}) {
    const double v0 = initial_velocity(s);
    detail::SingleRopeHysteretic model(s, law);
    return detail::integrate(model, v0, cfg, s, "hysteretic", false, 1.0, true);
}

/// Energy ledger of a single-rope elastic state.
inline EnergyLedger energy_ledger(double y, double v, const TensionCurve& law,
                                  const Scenario& s) {
    detail::SingleRopeElastic model(s, law);
    EnergyLedger e;
    e.kinetic = 0.5 * s.mass * v * v;
    e.gravitational = -s.mass * s.gravity * y;
    e.elastic = model.stored_energy(y);
    return e;
}

/// Energy ledger of a hysteretic state (dissipation read from the law's
/// committed history).
inline EnergyLedger energy_ledger(double y, double v, const HysteresisLaw& law,
                                  const Scenario& s) {
    EnergyLedger e;
    e.kinetic = 0.5 * s.mass * v * v;
    e.gravitational = -s.mass * s.gravity * y;
    e.elastic = s.rope_length * law.stored_energy_per_length(y / s.rope_length - 1.0);
    e.dissipated = s.rope_length * law.dissipated_per_length();
    return e;
}

/// Energy ledger of a carabiner state (elastic energy split across the two
/// segments at their solved strains).
inline EnergyLedger energy_ledger(double y, double v, const TensionCurve& law,
                                  const CarabinerScenario& cs) {
    detail::CarabinerElastic model(cs, law);
    EnergyLedger e;
    e.kinetic = 0.5 * cs.mass * v * v;
    e.gravitational = -cs.mass * cs.gravity * y;
    e.elastic = model.stored_energy(y);
    return e;
}

} // namespace ropesim
