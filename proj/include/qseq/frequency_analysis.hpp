#pragma once

// Visit multiplicities and dyadic block tables.
//
// A non-decreasing track X with steps in {0,1} visits each value v on a
// plateau; F_X(v) is the plateau length (how many m have X(m) = v) and
// m_X(v) is the entry time (first such m).  Counts are only trusted up to
// the last value whose plateau is certainly finished, i.e. up to
// X(m_max) - 1.
//
// The dyadic blocks are I_0 = [1,3] and I_k = [4^k, 4^(k+1) - 1].  For each
// block, a_{k,r} (resp. b_{k,r}) counts the values v in I_k with F_A(v) = r
// (resp. F_B(v) = r), S = a + b is the symmetrized count and Delta = a - b
// the skew.  The laws verified over complete blocks with k >= 1:
//
//     S_{k,r}     = 3 * 2^(2k-r+1)   for 1 <= r <= 2k+1,
//     S_{k,2k+2}  = 2,   S_{k,2k+3} = 1,   rows beyond are empty,
//     M_k = sum_r r*S_{k,r} = 12*4^k - 2       (the block width, twice over),
//     Delta_{k,1} = -C(2k,k),   Delta_{k,2} = 0,   sum_r Delta_{k,r} = 0,
//     D_k = sum_r r*Delta_{k,r} = C(2k+2, k+1),
//
// plus the layer-cake identity D_k = sum_{s>=2} (A_{k,>=s} - B_{k,>=s}) and
// the macro-transduction that produces block k+1 tail counts from block k
// cumulative counts:
//
//     a_{k+1,r} = A_{k,>=r-1} + [r = 2k+5],
//     b_{k+1,r} = B_{k,>=r-1} + [r = 2k+4]      for r >= 2,
//
// where X_{k,>=s} = sum_{r>=s} x_{k,r}.  Block 0 has S = (3,2,1) and
// Delta = (-1,0,1); it satisfies the D and block-sum laws but not the k>=1
// row formulas, so only its computed values are reported.
//
// The counting residual ties the multiplicities back to the raw sequence:
//
//     sum_{v <= 4^K - 1} F_A(v) - 2*(4^K - 1) = -K + (1/2) sum_{k<K} D_k.

#include <cstdint>
#include <vector>

#include "qseq/binomial.hpp"
#include "qseq/core_sequences.hpp"
#include "qseq/errors.hpp"
#include "qseq/report.hpp"

namespace qseq {

struct MultiplicityTable {
    std::vector<std::int64_t> count;       // count[v] = F(v), index 0 unused
    std::vector<std::int64_t> entry_time;  // entry_time[v] = m_X(v), 0 unused
    std::int64_t complete_up_to = 0;       // counts exact for 1 <= v <= this

    std::int64_t F(std::int64_t v) const {
        if (v < 1 || v > complete_up_to)
            throw IncompleteRange("multiplicity of " + std::to_string(v) +
                                  " not complete (have up to " +
                                  std::to_string(complete_up_to) + ")");
        return count[static_cast<std::size_t>(v)];
    }
    std::int64_t entry(std::int64_t v) const {
        if (v < 1 || v > complete_up_to + 1)
            throw IncompleteRange("entry time of " + std::to_string(v) + " not reached");
        return entry_time[static_cast<std::size_t>(v)];
    }
};

// Plateau lengths and entry times of a monotone track.  Throws Error if the
// track does not start at 1 or takes a step outside {0,1}.
MultiplicityTable visit_multiplicities(const SequenceTrack& track);

struct BlockCounts {
    int k = 0;
    std::int64_t lo = 0, hi = 0;         // the block interval [lo, hi]
    std::vector<std::int64_t> a_row;     // a_row[r-1] = a_{k,r}, r = 1..max_mult
    std::vector<std::int64_t> b_row;
    std::vector<std::int64_t> s_row;     // S = a + b
    std::vector<std::int64_t> delta_row; // Delta = a - b
    std::int64_t D = 0;                  // sum r * Delta
    std::int64_t M = 0;                  // sum r * S
    std::int64_t sum_fa = 0, sum_fb = 0; // sum of F over the block

    std::int64_t max_mult() const { return static_cast<std::int64_t>(s_row.size()); }
    // Cumulative tail count A_{k,>=s}; s beyond the table is an empty tail.
    std::int64_t a_tail(std::int64_t s) const;
    std::int64_t b_tail(std::int64_t s) const;
};

// Build the table for block k.  Throws IncompleteRange unless both
// multiplicity tables are complete through 4^(k+1) - 1.
BlockCounts block_table(const MultiplicityTable& fa, const MultiplicityTable& fb, int k);

// Row laws, skew laws, layer-cake, and macro-transduction across the given
// consecutive blocks (blocks[i].k must be i).  All checks are exact.
Report verify_frequency_laws(const std::vector<BlockCounts>& blocks);

// The counting residual for K = 1..K_max.  Uses the block D values for the
// right-hand side.  Throws OddAsymmetry if a paired block total breaks the
// relation sum_fa + sum_fb = 4*|I_k| - 2, which would mean the two tracks'
// visits stopped covering each index pair exactly once.
Report counting_residual(const MultiplicityTable& fa, const MultiplicityTable& fb,
                         const std::vector<BlockCounts>& blocks, int k_max);

}  // namespace qseq
