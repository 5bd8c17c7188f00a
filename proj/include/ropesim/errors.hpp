// Copyright 2026 The ropesim authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ropesim {

/// Base class for all recoverable errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A physical scenario violates its preconditions (m <= 0, |h0| > L, ...).
class InvalidScenario : public Error {
public:
    using Error::Error;
};

/// A tension-strain curve violates its invariants (unsorted strains,
/// decreasing tensions, missing origin knot, ...).
class InvalidCurve : public Error {
public:
    using Error::Error;
};

/// Micro-energy samples violate their preconditions.
class InvalidSamples : public Error {
public:
    using Error::Error;
};

/// Requested tension lies above the curve's attainable range.
class TensionUnreachable : public Error {
public:
    using Error::Error;
};

/// An unloading curve exceeds its loading curve somewhere.
class BranchOrderViolation : public Error {
public:
    using Error::Error;
};

/// Closed-form trajectory queried outside the first stretch phase.
class OutsideIdealWindow : public Error {
public:
    using Error::Error;
};

/// Carabiner angle or friction coefficient out of range.
class InvalidAngle : public Error {
public:
    using Error::Error;
};

/// Quasi-static segment solve cannot reach the requested elongation.
class NoEquilibrium : public Error {
public:
    using Error::Error;
};

/// A trajectory contains no arrest (no velocity zero-crossing after taut).
class NoArrest : public Error {
public:
    using Error::Error;
};

/// Law fed to the optimality certificate does not arrest within the budget.
class NotArresting : public Error {
public:
    using Error::Error;
};

/// Optimizer found no law that arrests the fall within the stretch budget.
class Infeasible : public Error {
public:
    using Error::Error;
};

/// Error while reading or writing an exchange file (CSV, JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace ropesim
