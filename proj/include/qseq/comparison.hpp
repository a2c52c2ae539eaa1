#pragma once

// Side-by-side comparison of the perturbed sequence with its unperturbed
// companion q(n) = q(n-q(n-1)) + q(n-q(n-2)).  Per full arch window
// n in [2u_r, 2u_{r+1}) the maximal pointwise gap max |q(n) - t(n)| tracks
// the excursion scale V+(r) with an empirical ratio near 5 to 5.8.  If q
// dies inside the requested range the comparison truncates there and says
// so in the report.

#include <cstdint>
#include <optional>
#include <vector>

#include "qseq/arch_decomposition.hpp"
#include "qseq/core_sequences.hpp"

namespace qseq {

struct ComparisonRow {
    int r = 0;
    std::int64_t max_diff = 0;   // max |q - t| over the arch window
    std::int64_t v_plus = 0;
    double ratio = 0.0;          // max_diff / V+
    bool complete = false;       // window fully inside both defined ranges
};

struct ComparisonReport {
    std::optional<std::int64_t> q_death;  // set if q died within range
    std::int64_t n_compared = 0;          // both sequences defined on [1, this]
    std::vector<ComparisonRow> rows;
};

ComparisonReport compare_sequences(const SequenceTrack& t, const QResult& q,
                                   const std::vector<Arch>& arches);

// Limit-ratio probe for the perturbed Conway-style companion: c(n)/n at n.
double ratio_at(const SequenceTrack& track, std::int64_t n);

}  // namespace qseq
