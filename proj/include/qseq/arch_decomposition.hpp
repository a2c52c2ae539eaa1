#pragma once

// Arch decomposition of the excursion track delta = B - A.
//
// delta runs in excursions: a positive arch on [u_r, v_r] followed by a
// negative stretch on [v_r, u_{r+1}], with delta = 0 exactly at the
// boundaries.  The skeleton has closed forms
//
//     a_r = (2*4^(r+1) + 1) / 3,     a_{r+1} = 4*a_r - 1,
//     u_r = 2*a_r - r - 2,           v_r = u_r + 2*a_r,
//
// and detection must reproduce it exactly: boundaries are found by scanning
// delta from the seed u_0 = 4, alternating "next zero after a strictly
// positive interior" (giving v_r) and "next zero after a strictly negative
// interior" (giving u_{r+1}).  Any disagreement with the closed form is a
// SkeletonMismatch, a hard error by design.  The positions m < 4 are the
// pre-arch ramp and take part in no arch.
//
// Per arch the detector also records the excursion extremes V+ = max delta
// on the arch and |V-| = max(-delta) on the following stretch.  Verified
// identities: the anchor t(2*a_r) = a_r, excursion palindromicity
// delta(u_r + s) = delta(v_r - s), the extreme formulas
//
//     V+(r) = 1 + sum_{k<=r} C(2k+1, k),      |V-(r)| = 2*V+(r) - 2,
//     W_r = V+(r) - V+(r-1) = C(2r+1, r),
//
// and the boundary plateau rows F_A(a_{k+1}) = 2k+5, F_B(2*a_k) = 2k+4.
//
// The lag E(v) = m_A(v) - m_B(v) compares entry times of the two tracks.
// Checked exactly: E(1) = 0, the dyadic accumulation E(4^K) = sum_{k<K} D_k,
// the bound 2*V+(r) >= sum_{k<=r} D_k, and the excursion form
// E(V) = delta(m_B(V)) + delta(m_A(V)) for every interior value V of every
// positive arch.

#include <cstdint>
#include <vector>

#include "qseq/core_sequences.hpp"
#include "qseq/errors.hpp"
#include "qseq/frequency_analysis.hpp"
#include "qseq/report.hpp"

namespace qseq {

struct Arch {
    int r = 0;
    std::int64_t a = 0;            // half-width of the positive arch
    std::int64_t u = 0, v = 0;     // positive arch boundaries, delta zero at both
    std::int64_t u_next = 0;       // end of the negative stretch
    std::int64_t v_plus = 0;       // max delta on [u, v]
    std::int64_t v_minus_abs = 0;  // max -delta on [v, u_next]
};

// Closed-form skeleton for level r.  Throws Overflow for r beyond 64-bit
// exact range (r > 29).
Arch skeleton(int r);

// Scan delta and return levels 0..r_max, cross-checked against skeleton().
// Throws SkeletonMismatch on any disagreement, InsufficientRange if the
// tracks end before u_{r_max + 1} is reached.
std::vector<Arch> detect_arches(const ParityTracks& tracks, int r_max);

// The proved and observed per-arch identities listed above.  The plateau
// rows need the multiplicity tables; pass nullptr to skip them.
Report verify_arch_identities(const SequenceTrack& t, const ParityTracks& tracks,
                              const std::vector<Arch>& arches,
                              const MultiplicityTable* fa, const MultiplicityTable* fb);

struct LagRecord {
    int K = 0;
    std::int64_t lag = 0;    // E(4^K)
    std::int64_t sum_d = 0;  // sum_{k<K} D_k
};

struct LagAnalysis {
    Report report;
    std::vector<LagRecord> records;
};

// Dyadic lag accumulation, the excursion bound per level, and the exhaustive
// interior excursion identity over positive arches up to sweep_r_max.
LagAnalysis lag_analysis(const ParityTracks& tracks, const std::vector<Arch>& arches,
                         const MultiplicityTable& fa, const MultiplicityTable& fb,
                         const std::vector<BlockCounts>& blocks, int k_max,
                         int sweep_r_max);

// The stall rule on positive arches, forward differences throughout:
// for u_r < m <= v_r, dA(m-1) = 1 implies dA(m - A(m-1)) = 0.
// Returns one item per level with the violation count (must be zero).
Report stall_rule_check(const ParityTracks& tracks, const std::vector<Arch>& arches);

}  // namespace qseq
