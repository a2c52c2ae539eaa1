#pragma once

// Staircase triangle, record point, and depth structure of the step words.
//
// The climb prefix of P_r is M_r = P_r[0 : tau_r), where tau_r is the first
// index at which the height profile of P_r attains its maximum V+(r).  The
// staircase row counts the maximal 1-runs of M_r by length:
//
//     c_{r,l} = #{ maximal 1-runs of length l in M_r },
//
// and runs_ge2 = sum_{l>=2} c_{r,l}.  Verified structure (with j*_r the
// first argmax of the gap slack of P_r):
//
//     c_{r,1} = (4^r - 1) / 3,
//     c_{r+1,l} = sum_{m >= l-1} c_{r,m}          for l >= 2,
//     tau_r + V+(r) = 4*a_{r-1}                   for r >= 1,
//     c_{r+1,1} - j*_r = V+(r) - 1                ("equation A"),
//     c_{r+1,1} + nu_r = a_r - V+(r)              ("equation B"),
//     nu_r := runs_ge2 of row r+1 = j*_r.
//
// The record point lives in the law-2 trace that produces P_{r+1} from N_r:
// at the output index tau_{r+1} (the peak of P_{r+1}) the slow head has read
// T + 1 bits of N_r, and
//
//     T = 2*a_r - V+(r+1) - 1 = j*_{r+1} - 1,    fast head  i = 2*a_r,
//     h_N(t) <= h_N(T) for all t <= T, with max_{t<T} h_N(t) = h_N(T) - 1
//     (margin exactly 1; at r = 0 the empty max counts as -1),
//     h_N(T) = V+(r+1) - 2*V+(r) - 1.
//
// Via the law-1 trace of N_r (heads a_t into P_r[2:], b_t into P_r[:-1]),
// the record fact splits:  h_P(a_T + 2) >= h_P(a_t + 2)  (fact A)  and
// h_P(b_T) >= h_P(b_t)  (fact B)  for all t <= T, and for r >= 1 the fast
// head sits just under the parent peak: a_T + 2 = tau_r - 1.
//
// Fact B is equivalent to a ballot property of Omega = P_r[0 : b_T): writing
// Omega = 0^{z_1} 1^{o_1} ... 0^{z_m} 1^{o_m} 0^{z_{m+1}} and reversing,
// Z_i = z_{m+2-i}, O_i = o_{m+1-i}, every partial sum sum_{i<=k} (Z_i - O_i)
// stays >= 3 (empty at r = 0, 1), while the degenerate end-of-word boundary
// carries slack 0.
//
// The depth identity connects N_r back to P_r at every position:
//
//     h_N(x) = h_P(a_x + 2) + h_P(b_x) - 2       for all 0 <= x <= |N_r|,
//
// so max h_N = 2*V+(r) - 2, attained first at X* = 2*a_r - 2 where both
// heads sit on parent peaks: h_P(a_X + 2) = h_P(b_X) = V+(r), b_X = tau_r.
//
// Finally the envelope: over the arch window n in [2*u_r, 2*u_{r+1}), the
// peak of |t(n)/n - 1/2| * sqrt(log2 n) shrinks as r grows toward the
// conjectured limiting constant 1/(3*sqrt(2*pi)) ~ 0.1330.

#include <cstdint>
#include <vector>

#include "qseq/arch_decomposition.hpp"
#include "qseq/core_sequences.hpp"
#include "qseq/report.hpp"
#include "qseq/word_machine.hpp"

namespace qseq {

struct StaircaseRow {
    int r = 0;
    std::int64_t tau = 0;             // climb length, first argmax of h_P
    std::int64_t peak = 0;            // h_P(tau) = V+(r)
    std::vector<std::int64_t> c;      // c[l-1] = c_{r,l}, l = 1..longest run
    std::int64_t runs_ge2 = 0;        // sum of c_{r,l} over l >= 2
};

StaircaseRow staircase_row(const BitWord& p, int r);

// Triangle recursion, singleton column, first-max identity, and equations
// A and B.  rows[i] must be the row for P_i; gaps[i] the gap profile of P_i.
Report verify_staircase(const std::vector<StaircaseRow>& rows,
                        const std::vector<Arch>& arches,
                        const std::vector<GapProfile>& gaps);

struct RecordReport {
    int r = 0;
    std::int64_t T = 0;              // slow-head record index in N_r
    std::int64_t i_peak = 0;         // fast-head position at the peak output
    std::int64_t margin = 0;         // h_N(T) - max_{t<T} h_N(t), want exactly 1
    bool record_ok = false;          // h_N(t) <= h_N(T) for all t <= T
    bool fact_a = false;
    bool fact_b = false;
    std::int64_t ballot_min_slack = 0;   // min over nontrivial boundaries; 0 if none
    bool ballot_interior_ok = false;     // all nontrivial slacks >= 3
    std::int64_t ballot_terminal = 0;    // end-of-word boundary slack, 0 by shape
    bool align_trace = false;        // T = 2a_r - V+(r+1) - 1 = j*_{r+1} - 1, i = 2a_r
    bool align_fast_head = false;    // a_T + 2 = tau_r - 1 (r >= 1; trivially set at 0)
    bool align_height = false;       // h_N(T) = V+(r+1) - 2*V+(r) - 1
    bool depth_max_aligned = false;  // X* = 2a_r - 2 with both heads on parent peaks
    bool nu_eq_jstar = false;
    bool runs_via_s0 = false;        // c_{r+1,1} + nu_r = #ones of S_0 before i_peak
    bool conditional = false;        // true if any observed part above failed
};

// All record-point checks at level r.  Inputs: the two step words, the law-1
// trace of N_r, the law-2 result (P_{r+1} with trace), both staircase rows,
// the arch, V+ of the next level, and the two gap argmaxes.  Throws
// TraceMissing if a trace is shorter than the word it should cover.
RecordReport record_claim_check(const BitWord& p, const BitWord& n,
                                const MachineTrace& law1_trace,
                                const BitWord& p_next, const MachineTrace& law2_trace,
                                const StaircaseRow& row, const StaircaseRow& row_next,
                                const Arch& arch, std::int64_t v_plus_next,
                                std::int64_t jstar, std::int64_t jstar_next);

// Exhaustive depth identity over N_r plus the first-depth-max alignment.
Report depth_check(const BitWord& p, const BitWord& n, const MachineTrace& law1_trace,
                   const Arch& arch, const StaircaseRow& row);

// Peak of the scaled fluctuation |t(n)/n - 1/2| * sqrt(log2 n) per arch
// window [2u_r, 2u_{r+1}).  Requires t to cover 2*u_{r_max+1} - 1.
std::vector<double> envelope_peaks(const SequenceTrack& t,
                                   const std::vector<Arch>& arches);

}  // namespace qseq
