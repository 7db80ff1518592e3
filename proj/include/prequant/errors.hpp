#pragma once

#include <stdexcept>
#include <string>

namespace prequant {

// Base class for the numerically meaningful failure modes of this library.
// Plain precondition violations (bad sizes, bad arguments) use the standard
// exceptions instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// logMap asked for the principal logarithm at (or too close to) -identity,
// where no principal branch exists.
struct BranchPointError : Error {
    using Error::Error;
};

// An iterative solve (root finder, refinement loop) exhausted its budget.
struct ConvergenceError : Error {
    using Error::Error;
};

// A rank decision had singular values clustering at the cutoff; the dimension
// is reported as undecidable rather than guessed.
struct RankAmbiguityError : Error {
    using Error::Error;
};

// A lattice plaquette phase landed within the safety margin of the +-pi
// branch cut (or the grid was too coarse to start).
struct AdmissibilityError : Error {
    using Error::Error;
};

// A quantity that must be an exact integer was not within tolerance of one.
struct NonIntegralDegreeError : Error {
    using Error::Error;
};

// A sampled point on the quotient landed too close to a branch point for a
// reliable preimage count.
struct BranchProximityError : Error {
    using Error::Error;
};

// Preimage counts disagreed across regular values.
struct InconsistentCountError : Error {
    using Error::Error;
};

// Continuity-based branch tracking could not assign phases unambiguously even
// after refinement.
struct BranchTrackingError : Error {
    using Error::Error;
};

}  // namespace prequant
