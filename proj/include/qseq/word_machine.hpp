#pragma once

// Binary words, height profiles, and the two-tape interleave machine.
//
// Words here are the step words of the parity tracks: on a positive arch
// [u_r, v_r] the word P_r collects the forward steps dA(m), on the following
// negative stretch [v_r, u_{r+1}] the word N_r collects dB(x).  Bits are
// stored packed, 64 per machine word, with a zero-count checkpoint at every
// word boundary so prefix counts and heights are O(1):
//
//     h(t) = #zeros in w[0..t) - #ones in w[0..t) = 2*zeros(t) - t.
//
// The interleave machine merges two tapes X and Y under a one-bit state:
// state 0 reads the next bit of X, state 1 reads the next bit of Y, the bit
// read is emitted and becomes the new state; an exhausted tape hands its
// turns to the other.  The trace records both head positions before every
// step, so i_t + j_t = t always.
//
// Two exact laws connect consecutive step words:
//
//     law 1:  N_r    = Inter(P_r[2:], P_r[:-1], start state 1)
//     law 2:  P_r+1  = Inter([0,0] N_r [1], [0] N_r, start state 0)
//
// The tape read in state 0 is called the fast head, the state-1 tape the
// slow head (in law 1 the fast tape P_r[2:] leads the slow tape P_r[:-1] by
// two positions of the same word; the names stick for law 2 as well).
//
// Extraction inverts interleaving: from a word that starts with 0 and ends
// with 1, tape E0 takes the first bit plus every bit preceded by a 0, tape
// E1 every bit preceded by a 1, and Inter(E0, E1, first bit) rebuilds the
// word exactly.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qseq/arch_decomposition.hpp"
#include "qseq/core_sequences.hpp"
#include "qseq/errors.hpp"

namespace qseq {

// ------------------------------------------------------------------ BitWord

class BitWord {
  public:
    BitWord() = default;

    static BitWord from_bits(const std::vector<std::uint8_t>& bits);
    static BitWord from_string(std::string_view s);  // characters '0' and '1'

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }
    int bit(std::size_t k) const {
        return static_cast<int>((words_[k >> 6] >> (k & 63)) & 1u);
    }
    std::int64_t zeros() const { return zeros_; }
    std::int64_t ones() const { return static_cast<std::int64_t>(n_) - zeros_; }

    // Zeros among the first t bits, O(1) via the checkpoint table.
    std::int64_t zeros_prefix(std::size_t t) const;
    // Height after t bits: h(t) = 2*zeros_prefix(t) - t, h(0) = 0.
    std::int64_t height(std::size_t t) const {
        return 2 * zeros_prefix(t) - static_cast<std::int64_t>(t);
    }

    std::string str() const;                    // "0010..." rendering
    std::vector<std::uint8_t> unpack() const;   // one byte per bit

    bool operator==(const BitWord& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const BitWord& o) const { return !(*this == o); }

    // Incremental construction; freeze() builds the checkpoint table.
    class Builder {
      public:
        explicit Builder(std::size_t reserve_bits = 0);
        void push(int b);
        BitWord freeze();

      private:
        std::vector<std::uint64_t> words_;
        std::size_t n_ = 0;
    };

  private:
    std::vector<std::uint64_t> words_;  // bit k lives at words_[k/64] >> (k%64)
    std::vector<std::int64_t> ck_;      // ck_[i] = zeros among bits [0, 64*i)
    std::size_t n_ = 0;
    std::int64_t zeros_ = 0;

    void finish();  // compute ck_ and zeros_ from words_
};

// ------------------------------------------------------- profiles and shape

// Full height profile h(0..|w|), for exports and small-word tests.
std::vector<std::int64_t> height_profile(const BitWord& w);

// Maximum height and the first index attaining it (the climb length tau).
struct HeightPeak {
    std::int64_t max;
    std::int64_t first_argmax;
};
HeightPeak height_peak(const BitWord& w);

// Structural facts about one step word, all computed, none assumed.
struct WordDiagnostics {
    std::size_t length = 0;
    bool balanced = false;           // equal zeros and ones
    bool anti_palindromic = false;   // w[k] + w[len-1-k] = 1 for all k
    bool interior_positive = false;  // h(t) >= 1 for 0 < t < len
    bool height_palindromic = false; // h(len - t) = h(t) for all t
    std::int64_t initial_zero_run = 0;
    std::int64_t final_one_run = 0;
    std::int64_t max_height = 0;
    std::int64_t first_argmax = 0;
};
WordDiagnostics word_diagnostics(const BitWord& w);

// ------------------------------------------------------------- gap profiles

// For a balanced word ending in 1 with ones at positions o_0 < o_1 < ...,
// the gaps are g_0 = o_0 and g_i = o_i - o_{i-1}, and the slack is
// S(j) = o_j - 2j - 2.  The slack is pinned to the height profile by
// S(j) = h(o_j) - 2, which ties the gap view to the excursion view; the
// constructor verifies that identity for every j and throws on violation
// (it is exact, not statistical).  mirror_symmetric reports whether
// g_j = g_{a-2-j} holds over the first a-1 gaps (the final gap excluded);
// it is an observation that holds only at level 0, not an invariant.
struct GapProfile {
    std::vector<std::int64_t> ones_pos;  // o_j, 0-indexed positions
    std::vector<std::int64_t> gaps;      // g_j, same length
    std::vector<std::int64_t> slack;     // S(j) = o_j - 2j - 2
    std::int64_t max_slack = 0;
    std::int64_t first_argmax = 0;       // j*, first j attaining max slack
    bool mirror_symmetric = false;
};
GapProfile gap_profile(const BitWord& w);

// --------------------------------------------------------------- interleave

struct TraceStep {
    std::int64_t i, j;  // head positions on the two tapes before the step
    std::uint8_t state;
};
using MachineTrace = std::vector<TraceStep>;  // length |output| + 1

struct InterleaveResult {
    BitWord word;
    MachineTrace trace;
};

InterleaveResult interleave(const BitWord& x, const BitWord& y, int start_state);

// Split w into (E0, E1) as described above.  Throws BadBoundary unless w
// starts with 0 and ends with 1 (the shape under which extraction inverts
// interleaving).
std::pair<BitWord, BitWord> extract(const BitWord& w);

// The two production laws.  law1 needs |p| >= 3, law2 any nonempty n.
InterleaveResult law1(const BitWord& p);
InterleaveResult law2(const BitWord& n);

// --------------------------------------------------------------- step words

// Read the step words of level r off the parity tracks:
//   P_r = (dA(m)) for m in [u_r, v_r),   length 2*a_r,
//   N_r = (dB(x)) for x in [v_r, u_next), length 4*a_r - 3.
// Requires m_max > u_next; throws InsufficientRange otherwise.
struct StepWords {
    BitWord p, n;
};
StepWords step_words(const ParityTracks& tracks, const Arch& arch);

}  // namespace qseq
