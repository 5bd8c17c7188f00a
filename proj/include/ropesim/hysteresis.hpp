// Copyright 2026 The ropesim authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ropesim/energy_density.hpp"
#include "ropesim/errors.hpp"
#include "ropesim/tension_curve.hpp"

namespace ropesim {

/// Rate-independent hysteretic tension-strain law: a loading curve followed
/// while the strain grows, an unloading curve followed while it shrinks,
/// with vertical (constant-strain) transitions between the branches at
/// reversal points.  The area enclosed between the curves over a traversed
/// strain range is dissipated, not returned.
///
/// The object is stateful along one strain history: evaluate trial tensions
/// with tension(), then commit() each accepted strain to advance the branch
/// state and the dissipation ledger.  State is confined to one simulation
/// run; copy the law to run another.
class HysteresisLaw {
public:
    enum class Branch { Loading, Unloading, Reloading };

    HysteresisLaw(TensionCurve loading, TensionCurve unloading)
        : loading_(std::move(loading)),
          unloading_(std::move(unloading)),
          loading_energy_(EnergyDensity::from_tension_curve(loading_)),
          unloading_energy_(EnergyDensity::from_tension_curve(unloading_)) {
        validate_order();
    }

    const TensionCurve& loading() const { return loading_; }
    const TensionCurve& unloading() const { return unloading_; }

    /// Trial tension at a strain using the committed branch.
    double tension(double strain) const {
        return branch_ == Branch::Unloading ? unloading_.tension(strain)
                                            : loading_.tension(strain);
    }

    /// Advances the state to a new committed strain.  Increasing strain
    /// rides the loading curve (switching up from the unloading curve at
    /// the reversal point); decreasing strain rides the unloading curve and
    /// accrues the area between the curves as dissipated energy.
    void commit(double strain) {
        if (strain > strain_) {
            if (branch_ == Branch::Unloading) {
                branch_ = Branch::Reloading;
                anchor_strain_ = strain_;
            }
            if (strain >= max_strain_) {
                branch_ = Branch::Loading;
                max_strain_ = strain;
            }
        } else if (strain < strain_) {
            if (branch_ != Branch::Unloading) {
                branch_ = Branch::Unloading;
                anchor_strain_ = strain_;
            }
            dissipated_ += loop_area(strain, strain_);
        }
        strain_ = strain;
    }

    /// Forces the branch at a turning point, where the physical tension may
    /// take any value between the curves; the integrator selects the branch
    /// from the sign of the imminent strain rate.
    void force_branch(Branch branch) {
        if (branch == Branch::Unloading && branch_ != Branch::Unloading) {
            branch_ = Branch::Unloading;
            anchor_strain_ = strain_;
        } else if (branch != Branch::Unloading && branch_ == Branch::Unloading) {
            branch_ = Branch::Reloading;
            anchor_strain_ = strain_;
        }
    }

    /// Commit-and-evaluate convenience for quasi-static strain histories.
    double advance(double strain) {
        commit(strain);
        return tension(strain);
    }

    /// Energy per unit length dissipated so far along the committed history.
    double dissipated_per_length() const { return dissipated_; }

    /// Recoverable stored energy per unit length at a strain (the loading
    /// branch integral; the ledger convention under which kinetic +
    /// gravitational + stored + dissipated energy is conserved).
    double stored_energy_per_length(double strain) const {
        return loading_energy_.value(strain);
    }

    /// Area between loading and unloading curves over [0, hi].
    double loop_area(double hi) const { return loop_area(0.0, hi); }

    /// Area between loading and unloading curves over [lo, hi] (energy per
    /// unit length dissipated by one descent of that range).
    double loop_area(double lo, double hi) const {
        if (!(hi > lo)) return 0.0;
        const double load = loading_energy_.value(hi) - loading_energy_.value(lo);
        const double unload = unloading_energy_.value(hi) - unloading_energy_.value(lo);
        return load - unload;
    }

    Branch branch() const { return branch_; }
    double committed_strain() const { return strain_; }
    double max_strain() const { return max_strain_; }
    double anchor_strain() const { return anchor_strain_; }

    void reset() {
        branch_ = Branch::Loading;
        strain_ = 0.0;
        max_strain_ = 0.0;
        anchor_strain_ = 0.0;
        dissipated_ = 0.0;
    }

private:
    void validate_order() const {
        // The branch difference is piecewise linear between the merged
        // knots, so checking the union grid (plus the extrapolation slopes)
        // covers every strain.
        std::vector<double> grid = loading_.strains();
        grid.insert(grid.end(), unloading_.strains().begin(), unloading_.strains().end());
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        for (double eps : grid) {
            const double lo = loading_.tension(eps);
            const double un = unloading_.tension(eps);
            const double tol = 1e-12 * std::max(1.0, std::abs(lo));
            if (un > lo + tol)
                throw BranchOrderViolation(
                    "hysteresis: unloading tension " + std::to_string(un) +
                    " exceeds loading tension " + std::to_string(lo) +
                    " at strain " + std::to_string(eps));
        }
        if (unloading_.last_slope() > loading_.last_slope() + 1e-12)
            throw BranchOrderViolation(
                "hysteresis: unloading curve overtakes loading curve beyond the last knot");
    }

    TensionCurve loading_;
    TensionCurve unloading_;
    EnergyDensity loading_energy_;
    EnergyDensity unloading_energy_;

    Branch branch_ = Branch::Loading;
    double strain_ = 0.0;
    double max_strain_ = 0.0;
    double anchor_strain_ = 0.0;
    double dissipated_ = 0.0;
};

/// Builds a hysteretic law from a loading/unloading curve pair, validating
/// the branch order.
inline HysteresisLaw make_hysteresis(TensionCurve loading, TensionCurve unloading) {
    return HysteresisLaw(std::move(loading), std::move(unloading));
}

} // namespace ropesim
