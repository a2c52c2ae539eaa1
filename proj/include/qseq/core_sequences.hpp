#pragma once

// Core sequence generation and the parity split.
//
// The central object is the parity-perturbed Hofstadter recurrence
//
//     t(n) = t(n - t(n-1)) + t(n - t(n-2)) + (-1)^n,   t(1) = t(2) = 1.
//
// Every value is odd and 1 <= t(n) <= n, so both self-referential lookups
// stay in range and the sequence never dies.  Both facts are enforced at
// generation time: an out-of-range lookup throws IllDefined, an even value
// throws NotOdd.  Nothing is clamped; a violation means corrupted state.
//
// Two companions use the same plumbing:
//   - the unperturbed recurrence q(n) = q(n-q(n-1)) + q(n-q(n-2)), which is
//     not known to stay well defined, so its generator reports a death index
//     instead of throwing;
//   - a perturbed Conway-style recurrence c(n) = c(c(n-1)) + c(n-c(n-1)) + (-1)^n
//     (self-composition in the first term), used for a sanity check on its
//     limit ratio.
//
// The parity split maps t to half-integer-free tracks via r(n) = (t(n)+1)/2:
//
//     A(m) = r(2m-1),   B(m) = r(2m),
//     sigma(m) = A(m) + B(m) - m,   delta(m) = B(m) - A(m),
//
// with the exact reconstruction
//
//     t(2m)   = m - 1 + sigma(m) + delta(m),
//     t(2m-1) = m - 1 + sigma(m) - delta(m).
//
// A and B are non-decreasing with steps in {0,1}; all difference notation in
// this library is forward: dX(m) = X(m+1) - X(m).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qseq/errors.hpp"

namespace qseq {

// A 1-indexed integer sequence.  Slot 0 is a sentinel and never read.
struct SequenceTrack {
    std::string name;
    std::vector<std::int64_t> v;  // v[1..n_max]

    std::int64_t n_max() const { return static_cast<std::int64_t>(v.size()) - 1; }
    std::int64_t operator()(std::int64_t n) const { return v[static_cast<std::size_t>(n)]; }
};

// Generate the parity-perturbed sequence t(1..n_max).  Throws IllDefined or
// NotOdd if the proved invariants fail (they cannot, absent a bug).
SequenceTrack generate_qtilde(std::int64_t n_max);

struct QResult {
    SequenceTrack track;            // truncated at death-1 if death occurred
    std::optional<std::int64_t> death;  // first n where a lookup left [1, n-1]
};

// Generate the unperturbed companion q(1..n_max), stopping early if it dies.
QResult generate_q(std::int64_t n_max);

// Generate the perturbed Conway-style companion c(1..n_max).
SequenceTrack generate_conway_perturbed(std::int64_t n_max);

// Parity-split tracks, all 1-indexed over m = 1..m_max with m_max = n_max/2.
struct ParityTracks {
    SequenceTrack A, B, sigma, delta;
    std::int64_t m_max = 0;
};

// Split t into (A, B, sigma, delta).  Verifies oddness, the step property
// dA, dB in {0,1}, and exact reconstruction of t from sigma and delta; any
// violation throws (these are proved identities).
ParityTracks parity_split(const SequenceTrack& t);

}  // namespace qseq
