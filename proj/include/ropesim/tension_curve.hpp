// Copyright 2026 The ropesim authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ropesim/errors.hpp"
#include "ropesim/scenario.hpp"

namespace ropesim {

/// Monotone piecewise-linear tension-strain law of a rope.
///
/// Knots (strain, tension) with strictly increasing strains, first knot at
/// the origin, and non-decreasing tensions (equivalently, a convex stored
/// energy).  Tension is zero for all strains <= 0 (compression is free) and
/// continues linearly with the final segment's slope beyond the last knot.
class TensionCurve {
public:
    TensionCurve(std::vector<double> strains, std::vector<double> tensions)
        : strain_(std::move(strains)), tension_(std::move(tensions)) {
        validate();
    }

    /// Tension at a given strain.  Total on the reals and continuous.
    double tension(double strain) const {
        if (strain <= 0.0) return 0.0;
        const std::size_t n = strain_.size();
        if (strain >= strain_[n - 1])
            return tension_[n - 1] + last_slope() * (strain - strain_[n - 1]);
        const std::size_t i = segment_index(strain);
        const double w = (strain - strain_[i]) / (strain_[i + 1] - strain_[i]);
        return tension_[i] + w * (tension_[i + 1] - tension_[i]);
    }

    /// Smallest strain >= 0 whose tension reaches `b` (left generalized
    /// inverse).  On a plateau at exactly `b` this is the plateau's left
    /// endpoint.  Throws TensionUnreachable if `b` lies above the curve's
    /// attainable range.
    double strain_of_tension(double b) const {
        if (!(b >= 0.0))
            throw TensionUnreachable("strain_of_tension: tension must be >= 0");
        if (b == 0.0) return 0.0;
        const std::size_t n = strain_.size();
        // First knot whose tension reaches b.
        const auto it = std::lower_bound(tension_.begin(), tension_.end(), b);
        if (it == tension_.end()) {
            const double slope = last_slope();
            if (slope > 0.0) return strain_[n - 1] + (b - tension_[n - 1]) / slope;
            throw TensionUnreachable("strain_of_tension: tension " + std::to_string(b) +
                                     " above curve range " + std::to_string(tension_[n - 1]));
        }
        const std::size_t i = static_cast<std::size_t>(it - tension_.begin());
        if (i == 0) return strain_[0];  // b <= 0 handled above, so b == tension_[0] == 0
        // tension_[i-1] < b <= tension_[i]; interpolate inside segment i-1.
        const double db = tension_[i] - tension_[i - 1];
        const double w = (b - tension_[i - 1]) / db;
        return strain_[i - 1] + w * (strain_[i] - strain_[i - 1]);
    }

    /// Full strain interval attaining tension `b`: [left endpoint, right
    /// endpoint].  The right endpoint is +inf when the curve ends in a
    /// plateau at `b`.  Diagnostics companion of strain_of_tension.
    std::pair<double, double> strain_interval_of_tension(double b) const {
        const double lo = strain_of_tension(b);
        return {lo, strain_reachable_at(b)};
    }

    /// Largest strain whose tension does not exceed `b` (right generalized
    /// inverse); +inf when the extrapolated curve stays at or below `b`
    /// forever.  Never throws for b >= 0.
    double strain_reachable_at(double b) const {
        if (!(b >= 0.0)) return 0.0;
        const std::size_t n = strain_.size();
        // First knot whose tension strictly exceeds b.
        const auto it = std::upper_bound(tension_.begin(), tension_.end(), b);
        if (it == tension_.end()) {
            const double slope = last_slope();
            if (slope <= 0.0) return std::numeric_limits<double>::infinity();
            return strain_[n - 1] + (b - tension_[n - 1]) / slope;
        }
        const std::size_t i = static_cast<std::size_t>(it - tension_.begin());
        if (i == 0) return 0.0;
        const double db = tension_[i] - tension_[i - 1];
        const double w = (b - tension_[i - 1]) / db;
        return strain_[i - 1] + w * (strain_[i] - strain_[i - 1]);
    }

    /// Supremum of attainable tension under the extrapolation rule
    /// (+inf when the final slope is positive).
    double max_tension() const {
        if (last_slope() > 0.0) return std::numeric_limits<double>::infinity();
        return tension_.back();
    }

    double last_slope() const {
        const std::size_t n = strain_.size();
        return (tension_[n - 1] - tension_[n - 2]) / (strain_[n - 1] - strain_[n - 2]);
    }

    /// Index i of the knot segment [strain_[i], strain_[i+1]) containing
    /// `strain`; clamped to the last segment beyond the grid.
    std::size_t segment_index(double strain) const {
        const auto it = std::upper_bound(strain_.begin(), strain_.end(), strain);
        if (it == strain_.begin()) return 0;
        const std::size_t i = static_cast<std::size_t>(it - strain_.begin()) - 1;
        return std::min(i, strain_.size() - 2);
    }

    const std::vector<double>& strains() const { return strain_; }
    const std::vector<double>& tensions() const { return tension_; }
    std::size_t size() const { return strain_.size(); }

private:
    void validate() const {
        if (strain_.size() < 2 || strain_.size() != tension_.size())
            throw InvalidCurve("tension curve: needs at least 2 knots");
        if (strain_[0] != 0.0 || tension_[0] != 0.0)
            throw InvalidCurve("tension curve: first knot must be (0, 0)");
        for (std::size_t i = 0; i < strain_.size(); ++i) {
            if (!std::isfinite(strain_[i]) || !std::isfinite(tension_[i]))
                throw InvalidCurve("tension curve: non-finite knot");
            if (tension_[i] < 0.0)
                throw InvalidCurve("tension curve: negative tension at knot " +
                                   std::to_string(i));
            if (i > 0 && !(strain_[i] > strain_[i - 1]))
                throw InvalidCurve("tension curve: strains must be strictly increasing");
            if (i > 0 && tension_[i] < tension_[i - 1])
                throw InvalidCurve("tension curve: tensions must be non-decreasing");
        }
    }

    std::vector<double> strain_;
    std::vector<double> tension_;
};

/// The tension-strain law of the mathematically ideal rope for a scenario:
/// constant tension b0 = m g (L + dL - h0) / dL for all positive strains.
/// The step at zero strain is represented by a finite linear ramp on
/// [0, ramp_width].
inline TensionCurve ideal_plateau_law(const Scenario& s, double ramp_width = 1e-4) {
    s.validate();
    if (!(ramp_width > 0.0) || !std::isfinite(ramp_width))
        throw InvalidCurve("ideal plateau law: ramp width must be > 0");
    const double b0 = min_peak_tension(s);
    return TensionCurve({0.0, ramp_width, ramp_width + 1.0}, {0.0, b0, b0});
}

/// Linear law b = modulus * strain (for strain >= 0), extended indefinitely.
inline TensionCurve linear_law(double modulus) {
    if (!(modulus >= 0.0) || !std::isfinite(modulus))
        throw InvalidCurve("linear law: modulus must be >= 0");
    return TensionCurve({0.0, 1.0}, {0.0, modulus});
}

} // namespace ropesim
