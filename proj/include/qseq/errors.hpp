#pragma once

// Error types for the sequence verification library.  Every failure mode the
// library can detect maps to one of these, so callers can distinguish "the
// mathematics is violated" (SkeletonMismatch, NotOdd) from "you asked for more
// than the computed range supports" (InsufficientRange, IncompleteRange) and
// from plain misuse (MalformedWord, BadBoundary).

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qseq {

// Base class so callers can catch everything from this library in one clause.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A self-referential lookup n - value(n-1) or n - value(n-2) fell outside
// [1, n-1].  For the perturbed sequence this contradicts the proved bounds and
// means corrupted state; for the unperturbed Q it is a legitimate outcome that
// the generator reports as a death index instead of throwing.
struct IllDefined : Error {
    std::int64_t n;
    explicit IllDefined(std::int64_t n_)
        : Error("self-referential index out of range at n = " + std::to_string(n_)),
          n(n_) {}
};

// The perturbed sequence produced an even value, which the parity invariant
// rules out.  Only reachable through memory corruption or a broken generator.
struct NotOdd : Error {
    std::int64_t n;
    explicit NotOdd(std::int64_t n_)
        : Error("sequence value at n = " + std::to_string(n_) + " is even"), n(n_) {}
};

// Arch detection disagreed with the closed-form skeleton.  This is a proved
// identity, so a mismatch is a hard error, never a warning.
struct SkeletonMismatch : Error {
    int r;
    std::string field;
    SkeletonMismatch(int r_, const std::string& field_)
        : Error("arch detection disagrees with closed form at level " +
                std::to_string(r_) + " (" + field_ + ")"),
          r(r_), field(field_) {}
};

// The computed range is too short for the requested number of levels.
struct InsufficientRange : Error {
    using Error::Error;
};

// An exact integer computation would exceed the representable range.
struct Overflow : Error {
    using Error::Error;
};

// A word operation needed a specific boundary shape (e.g. extraction needs a
// word that starts with 0 and ends with 1) and the input lacks it.
struct BadBoundary : Error {
    using Error::Error;
};

// A word failed a structural precondition (balance, final bit, length).
struct MalformedWord : Error {
    using Error::Error;
};

// A multiplicity table was asked about values beyond the range where counts
// are complete.
struct IncompleteRange : Error {
    using Error::Error;
};

// The residual bookkeeping that depends on every value being odd found an
// asymmetry, meaning the parity invariant broke somewhere upstream.
struct OddAsymmetry : Error {
    using Error::Error;
};

// A machine trace was required (for head-position checks) but not supplied.
struct TraceMissing : Error {
    using Error::Error;
};

}  // namespace qseq
