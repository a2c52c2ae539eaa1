#include "qseq/comparison.hpp"

#include <algorithm>
#include <cmath>

namespace qseq {

ComparisonReport compare_sequences(const SequenceTrack& t, const QResult& q,
                                   const std::vector<Arch>& arches) {
    ComparisonReport rep;
    rep.q_death = q.death;
    rep.n_compared = std::min(t.n_max(), q.track.n_max());

    for (const Arch& arch : arches) {
        const std::int64_t lo = 2 * arch.u;
        if (lo > rep.n_compared) break;
        const std::int64_t hi = std::min(2 * arch.u_next - 1, rep.n_compared);

        ComparisonRow row;
        row.r = arch.r;
        row.v_plus = arch.v_plus;
        row.complete = hi == 2 * arch.u_next - 1;
        for (std::int64_t n = lo; n <= hi; ++n) {
            const std::int64_t d = q.track(n) - t(n);
            row.max_diff = std::max(row.max_diff, d < 0 ? -d : d);
        }
        row.ratio = static_cast<double>(row.max_diff) / static_cast<double>(row.v_plus);
        rep.rows.push_back(row);
    }
    return rep;
}

double ratio_at(const SequenceTrack& track, std::int64_t n) {
    if (n < 1 || n > track.n_max())
        throw InsufficientRange("ratio probe at " + std::to_string(n) +
                                " is outside the computed range");
    return static_cast<double>(track(n)) / static_cast<double>(n);
}

}  // namespace qseq
