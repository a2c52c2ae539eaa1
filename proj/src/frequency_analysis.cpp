#include "qseq/frequency_analysis.hpp"

#include <string>

namespace qseq {

// ------------------------------------------------------------ multiplicities

MultiplicityTable visit_multiplicities(const SequenceTrack& track) {
    if (track.n_max() < 1 || track(1) != 1)
        throw Error("multiplicity table needs a track starting at value 1");

    const std::int64_t m_max = track.n_max();
    const std::int64_t v_final = track(m_max);
    MultiplicityTable tab;
    tab.count.assign(static_cast<std::size_t>(v_final) + 1, 0);
    tab.entry_time.assign(static_cast<std::size_t>(v_final) + 1, 0);
    tab.entry_time[1] = 1;
    tab.count[1] = 1;

    for (std::int64_t m = 2; m <= m_max; ++m) {
        const std::int64_t step = track(m) - track(m - 1);
        if (step != 0 && step != 1)
            throw Error("track " + track.name + " takes a step outside {0,1} at m = " +
                        std::to_string(m));
        if (step == 1) tab.entry_time[static_cast<std::size_t>(track(m))] = m;
        ++tab.count[static_cast<std::size_t>(track(m))];
    }
    // The final value's plateau may extend past the computed range, so its
    // count is not trusted.
    tab.complete_up_to = v_final - 1;
    return tab;
}

// -------------------------------------------------------------- block tables

std::int64_t BlockCounts::a_tail(std::int64_t s) const {
    std::int64_t acc = 0;
    for (std::int64_t r = std::max<std::int64_t>(s, 1); r <= max_mult(); ++r)
        acc += a_row[static_cast<std::size_t>(r - 1)];
    return acc;
}

std::int64_t BlockCounts::b_tail(std::int64_t s) const {
    std::int64_t acc = 0;
    for (std::int64_t r = std::max<std::int64_t>(s, 1); r <= max_mult(); ++r)
        acc += b_row[static_cast<std::size_t>(r - 1)];
    return acc;
}

BlockCounts block_table(const MultiplicityTable& fa, const MultiplicityTable& fb, int k) {
    if (k < 0) throw Error("block index must be nonnegative");
    BlockCounts bc;
    bc.k = k;
    bc.lo = std::int64_t{1} << (2 * k);
    bc.hi = (std::int64_t{1} << (2 * (k + 1))) - 1;
    if (k == 0) bc.lo = 1;  // I_0 = [1, 3], same endpoints either way
    if (bc.hi > fa.complete_up_to || bc.hi > fb.complete_up_to)
        throw IncompleteRange("block " + std::to_string(k) +
                              " extends past the complete multiplicity range");

    std::int64_t max_mult = 0;
    for (std::int64_t v = bc.lo; v <= bc.hi; ++v)
        max_mult = std::max({max_mult, fa.F(v), fb.F(v)});

    bc.a_row.assign(static_cast<std::size_t>(max_mult), 0);
    bc.b_row.assign(static_cast<std::size_t>(max_mult), 0);
    for (std::int64_t v = bc.lo; v <= bc.hi; ++v) {
        ++bc.a_row[static_cast<std::size_t>(fa.F(v) - 1)];
        ++bc.b_row[static_cast<std::size_t>(fb.F(v) - 1)];
        bc.sum_fa += fa.F(v);
        bc.sum_fb += fb.F(v);
    }

    bc.s_row.resize(static_cast<std::size_t>(max_mult));
    bc.delta_row.resize(static_cast<std::size_t>(max_mult));
    for (std::int64_t r = 1; r <= max_mult; ++r) {
        const std::size_t i = static_cast<std::size_t>(r - 1);
        bc.s_row[i] = bc.a_row[i] + bc.b_row[i];
        bc.delta_row[i] = bc.a_row[i] - bc.b_row[i];
        bc.D += r * bc.delta_row[i];
        bc.M += r * bc.s_row[i];
    }
    if (bc.D != bc.sum_fa - bc.sum_fb || bc.M != bc.sum_fa + bc.sum_fb)
        throw Error("block " + std::to_string(k) + " internal sum mismatch");
    return bc;
}

// ---------------------------------------------------------------------- laws

Report verify_frequency_laws(const std::vector<BlockCounts>& blocks) {
    Report rep;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const BlockCounts& bc = blocks[i];
        const int k = bc.k;
        if (static_cast<int>(i) != k) throw Error("blocks must be consecutive from k = 0");

        if (k == 0) {
            // Block 0 is fixed data; the k >= 1 row formulas do not apply.
            const bool rows_ok = bc.a_row == std::vector<std::int64_t>{1, 1, 1} &&
                                 bc.b_row == std::vector<std::int64_t>{2, 1, 0};
            rep.add("freq.block0_rows", 0, rows_ok, false);
            rep.add("freq.skew_total", 0, bc.D == 2 && bc.M == 10, false,
                    "D = " + std::to_string(bc.D) + ", M = " + std::to_string(bc.M));
        } else {
            // Symmetrized rows: powers of two down to the two boundary rows.
            bool s_ok = bc.max_mult() == 2 * k + 3;
            for (std::int64_t r = 1; s_ok && r <= bc.max_mult(); ++r) {
                std::int64_t want;
                if (r <= 2 * k + 1)
                    want = 3 * (std::int64_t{1} << (2 * k - r + 1));
                else
                    want = (r == 2 * k + 2) ? 2 : 1;
                s_ok = bc.s_row[static_cast<std::size_t>(r - 1)] == want;
            }
            rep.add("freq.sym_rows", k, s_ok, false);
            rep.add("freq.row_support", k, bc.max_mult() == 2 * k + 3, false,
                    "max multiplicity " + std::to_string(bc.max_mult()));

            std::int64_t delta_total = 0;
            for (std::int64_t d : bc.delta_row) delta_total += d;
            rep.add("freq.skew_head", k,
                    bc.delta_row[0] == -binomial(2 * k, k) &&
                        (bc.max_mult() < 2 || bc.delta_row[1] == 0),
                    false);
            rep.add("freq.skew_balance", k, delta_total == 0, false);
            rep.add("freq.mass_total", k, bc.M == 12 * (std::int64_t{1} << (2 * k)) - 2,
                    false, "M = " + std::to_string(bc.M));
        }

        // The first-moment skew is an exact binomial at every block.
        rep.add("freq.skew_moment", k, bc.D == binomial(2 * k + 2, k + 1), false,
                "D = " + std::to_string(bc.D));

        // Layer-cake: the skew moment equals the cumulative tail differences.
        std::int64_t cake = 0;
        for (std::int64_t s = 2; s <= bc.max_mult(); ++s)
            cake += bc.a_tail(s) - bc.b_tail(s);
        rep.add("freq.layer_cake", k, bc.D == cake, false);

        // Block sums of the raw multiplicities split the skew evenly.
        const std::int64_t width = bc.hi - bc.lo + 1;
        rep.add("freq.block_sum", k,
                bc.D % 2 == 0 && bc.sum_fa == 2 * width - 1 + bc.D / 2 &&
                    bc.sum_fb == 2 * width - 1 - bc.D / 2,
                false,
                "sum F_A = " + std::to_string(bc.sum_fa) +
                    ", sum F_B = " + std::to_string(bc.sum_fb));

        // Macro-transduction from the previous block's cumulative tails.
        if (i >= 1) {
            const BlockCounts& prev = blocks[i - 1];
            bool macro_ok = true;
            for (std::int64_t r = 2; r <= bc.max_mult(); ++r) {
                const std::int64_t want_a =
                    prev.a_tail(r - 1) + (r == 2 * (k - 1) + 5 ? 1 : 0);
                const std::int64_t want_b =
                    prev.b_tail(r - 1) + (r == 2 * (k - 1) + 4 ? 1 : 0);
                if (bc.a_row[static_cast<std::size_t>(r - 1)] != want_a ||
                    bc.b_row[static_cast<std::size_t>(r - 1)] != want_b) {
                    macro_ok = false;
                    break;
                }
            }
            rep.add("freq.macro_transduction", k, macro_ok, false);
        }
    }
    return rep;
}

// ------------------------------------------------------------------ residual

Report counting_residual(const MultiplicityTable& fa, const MultiplicityTable& fb,
                         const std::vector<BlockCounts>& blocks, int k_max) {
    Report rep;
    // Accumulate the prefix sums straight from the tables so the residual
    // does not merely re-add the block sums it is compared against.
    std::int64_t sum_fa = 0, sum_fb = 0, sum_d = 0, v = 1;
    for (int K = 1; K <= k_max && static_cast<std::size_t>(K) <= blocks.size(); ++K) {
        const std::int64_t edge = (std::int64_t{1} << (2 * K)) - 1;  // 4^K - 1
        if (edge > fa.complete_up_to || edge > fb.complete_up_to)
            throw IncompleteRange("residual check needs counts through " +
                                  std::to_string(edge));
        for (; v <= edge; ++v) {
            sum_fa += fa.F(v);
            sum_fb += fb.F(v);
        }
        // Every index pair (2m-1, 2m) contributes one visit to each track,
        // so the paired prefix totals must agree up to the entry-time lag.
        if (sum_fa + sum_fb != 4 * edge - 2 * K)
            throw OddAsymmetry("paired visit total is off at 4^" + std::to_string(K));
        sum_d += blocks[static_cast<std::size_t>(K - 1)].D;
        const std::int64_t residual = sum_fa - 2 * edge;
        rep.add("freq.counting_residual", K, 2 * residual == -2 * K + sum_d, false,
                "residual = " + std::to_string(residual));
    }
    return rep;
}

}  // namespace qseq
