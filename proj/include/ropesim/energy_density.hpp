// Copyright 2026 The ropesim authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ropesim/errors.hpp"
#include "ropesim/tension_curve.hpp"

namespace ropesim {

/// Sampled microscopic energy density, possibly non-convex.
struct MicroEnergySamples {
    std::vector<double> strains;
    std::vector<double> energies;

    void validate() const {
        if (strains.size() < 3 || strains.size() != energies.size())
            throw InvalidSamples("micro energy: needs at least 3 samples");
        for (std::size_t i = 0; i < strains.size(); ++i) {
            if (!std::isfinite(strains[i]) || !std::isfinite(energies[i]))
                throw InvalidSamples("micro energy: non-finite sample");
            if (energies[i] < 0.0)
                throw InvalidSamples("micro energy: negative energy at sample " +
                                     std::to_string(i));
            if (i > 0 && !(strains[i] > strains[i - 1]))
                throw InvalidSamples("micro energy: strains must be strictly increasing");
        }
    }
};

/// Per-property result of checking (P1) W >= 0, (P2) W(0) = 0,
/// (P3) W convex.
struct PropertyReport {
    bool nonnegative = false;
    bool zero_at_origin = false;
    bool convex = false;
    bool all() const { return nonnegative && zero_at_origin && convex; }
};

/// Elastic energy density W(strain) on a knot grid.
///
/// Two construction routes share one evaluation rule (each knot segment
/// stores the tension at both ends and W is the exact integral of the
/// linear tension across the segment):
///  - from_tension_curve: W is piecewise quadratic, tension continuous,
///    W clamped to 0 for strain <= 0.
///  - from_samples: W is piecewise linear through the given values (the
///    segment tension is the constant chord slope); used for raw or
///    convexified microscopic energies, which need not satisfy the rope
///    invariants until checked.
class EnergyDensity {
public:
    static EnergyDensity from_tension_curve(const TensionCurve& curve) {
        EnergyDensity w;
        const auto& eps = curve.strains();
        const auto& b = curve.tensions();
        const std::size_t n = eps.size();
        w.strain_ = eps;
        w.energy_.resize(n);
        w.b_left_.resize(n - 1);
        w.b_right_.resize(n - 1);
        w.energy_[0] = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            w.b_left_[i] = b[i];
            w.b_right_[i] = b[i + 1];
            w.energy_[i + 1] =
                w.energy_[i] + 0.5 * (b[i] + b[i + 1]) * (eps[i + 1] - eps[i]);
        }
        w.clamp_compression_ = true;
        return w;
    }

    static EnergyDensity from_samples(std::vector<double> strains,
                                      std::vector<double> energies) {
        if (strains.size() < 2 || strains.size() != energies.size())
            throw InvalidSamples("energy density: needs at least 2 samples");
        for (std::size_t i = 0; i < strains.size(); ++i) {
            if (!std::isfinite(strains[i]) || !std::isfinite(energies[i]))
                throw InvalidSamples("energy density: non-finite sample");
            if (i > 0 && !(strains[i] > strains[i - 1]))
                throw InvalidSamples("energy density: strains must be strictly increasing");
        }
        EnergyDensity w;
        w.strain_ = std::move(strains);
        w.energy_ = std::move(energies);
        const std::size_t n = w.strain_.size();
        w.b_left_.resize(n - 1);
        w.b_right_.resize(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double slope = (w.energy_[i + 1] - w.energy_[i]) /
                                 (w.strain_[i + 1] - w.strain_[i]);
            w.b_left_[i] = slope;
            w.b_right_[i] = slope;
        }
        w.clamp_compression_ = false;
        return w;
    }

    /// W at a strain.  Exactly the stored value at knots; exact quadratic
    /// (or linear) in between; extended by the boundary segment rule
    /// outside the grid.
    double value(double strain) const {
        const std::size_t n = strain_.size();
        if (clamp_compression_ && strain <= 0.0) return 0.0;
        if (strain <= strain_[0])
            return energy_[0] + b_left_[0] * (strain - strain_[0]);
        if (strain >= strain_[n - 1]) {
            const double d = strain - strain_[n - 1];
            const double slope = segment_slope(n - 2);
            const double b_end = b_right_[n - 2];
            return energy_[n - 1] + b_end * d + 0.5 * slope * d * d;
        }
        const std::size_t i = segment_index(strain);
        const double d = strain - strain_[i];
        if (d == 0.0) return energy_[i];
        const double slope = segment_slope(i);
        return energy_[i] + b_left_[i] * d + 0.5 * slope * d * d;
    }

    /// dW/dstrain (the tension).  Right-limit at interior knots where the
    /// piecewise-linear representation has a slope jump.
    double derivative(double strain) const {
        const std::size_t n = strain_.size();
        if (clamp_compression_ && strain <= 0.0) return 0.0;
        if (strain < strain_[0]) return b_left_[0];
        if (strain >= strain_[n - 1])
            return b_right_[n - 2] + segment_slope(n - 2) * (strain - strain_[n - 1]);
        const std::size_t i = segment_index(strain);
        const double w = (strain - strain_[i]) / (strain_[i + 1] - strain_[i]);
        return b_left_[i] + w * (b_right_[i] - b_left_[i]);
    }

    /// Checks properties (P1) non-negativity, (P2) W(0) = 0, and (P3)
    /// convexity (non-decreasing knot slopes).
    PropertyReport check_properties(double tol = 1e-9) const {
        PropertyReport r;
        r.nonnegative = true;
        for (double w : energy_)
            if (w < -tol) r.nonnegative = false;
        r.zero_at_origin = std::abs(value(0.0)) <= tol;
        r.convex = true;
        for (std::size_t i = 0; i + 1 < b_left_.size(); ++i) {
            if (b_right_[i] > b_left_[i + 1] + tol) r.convex = false;
        }
        for (std::size_t i = 0; i < b_left_.size(); ++i)
            if (b_left_[i] > b_right_[i] + tol) r.convex = false;
        return r;
    }

    const std::vector<double>& strains() const { return strain_; }
    const std::vector<double>& energies() const { return energy_; }
    bool clamps_compression() const { return clamp_compression_; }

private:
    EnergyDensity() = default;

    std::size_t segment_index(double strain) const {
        const auto it = std::upper_bound(strain_.begin(), strain_.end(), strain);
        if (it == strain_.begin()) return 0;
        const std::size_t i = static_cast<std::size_t>(it - strain_.begin()) - 1;
        return std::min(i, strain_.size() - 2);
    }

    double segment_slope(std::size_t i) const {
        return (b_right_[i] - b_left_[i]) / (strain_[i + 1] - strain_[i]);
    }

    std::vector<double> strain_;
    std::vector<double> energy_;
    std::vector<double> b_left_;   // tension at segment start, per segment
    std::vector<double> b_right_;  // tension at segment end, per segment
    bool clamp_compression_ = false;
};

/// Stored energy of a rope law: exact integral of the tension curve.
inline double energy_of_strain(const TensionCurve& curve, double strain) {
    return EnergyDensity::from_tension_curve(curve).value(strain);
}

/// Lower convex envelope of sampled microscopic energy, evaluated back on
/// the sample grid.  On any non-convex stretch the result is the chord
/// between the supporting samples, the energy of the phase mixture.
inline EnergyDensity convexify(const MicroEnergySamples& samples) {
    samples.validate();
    const auto& x = samples.strains;
    const auto& y = samples.energies;
    const std::size_t n = x.size();

    // Lower convex hull of the sample points (monotone chain).
    std::vector<std::size_t> hull;
    hull.reserve(n);
    auto keeps_left_turn = [&](std::size_t a, std::size_t b, std::size_t c) {
        const double cross =
            (x[b] - x[a]) * (y[c] - y[a]) - (y[b] - y[a]) * (x[c] - x[a]);
        return cross > 0.0;
    };
    for (std::size_t i = 0; i < n; ++i) {
        while (hull.size() >= 2 &&
               !keeps_left_turn(hull[hull.size() - 2], hull[hull.size() - 1], i))
            hull.pop_back();
        hull.push_back(i);
    }

    // Interpolate the hull back onto the original grid.
    std::vector<double> env(n);
    std::size_t seg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (seg + 1 < hull.size() - 1 && x[hull[seg + 1]] <= x[i]) ++seg;
        const std::size_t a = hull[seg], b = hull[seg + 1];
        if (i == a) {
            env[i] = y[a];
        } else if (i == b) {
            env[i] = y[b];
        } else {
            const double w = (x[i] - x[a]) / (x[b] - x[a]);
            env[i] = y[a] + w * (y[b] - y[a]);
        }
    }
    return EnergyDensity::from_samples(x, std::move(env));
}

} // namespace ropesim
