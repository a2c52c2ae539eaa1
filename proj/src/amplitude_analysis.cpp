#include "qseq/amplitude_analysis.hpp"

#include <cmath>
#include <string>

namespace qseq {

namespace {

// c_{r,1} with the empty row 0 counting as zero singleton runs.
std::int64_t c1(const StaircaseRow& row) {
    return row.c.empty() ? 0 : row.c[0];
}

}  // namespace

// ----------------------------------------------------------- staircase rows

StaircaseRow staircase_row(const BitWord& p, int r) {
    StaircaseRow row;
    row.r = r;
    const HeightPeak peak = height_peak(p);
    row.tau = peak.first_argmax;
    row.peak = peak.max;
    // The first maximum is reached by a climbing 0, so the cut cannot land
    // inside a 1-run; the counts below rely on that.
    if (row.tau > 0 && p.bit(static_cast<std::size_t>(row.tau) - 1) != 0)
        throw Error("climb prefix ends in a 1 at level " + std::to_string(r));

    std::int64_t run = 0;
    for (std::int64_t t = 0; t < row.tau; ++t) {
        if (p.bit(static_cast<std::size_t>(t)) == 1) {
            ++run;
        } else if (run > 0) {
            if (static_cast<std::int64_t>(row.c.size()) < run)
                row.c.resize(static_cast<std::size_t>(run), 0);
            ++row.c[static_cast<std::size_t>(run - 1)];
            if (run >= 2) ++row.runs_ge2;
            run = 0;
        }
    }
    // No trailing 1-run can remain open: the prefix ends with the climbing 0.
    if (run > 0) throw Error("climb prefix left an open 1-run at level " + std::to_string(r));
    return row;
}

Report verify_staircase(const std::vector<StaircaseRow>& rows,
                        const std::vector<Arch>& arches,
                        const std::vector<GapProfile>& gaps) {
    Report rep;
    const std::size_t n = std::min({rows.size(), arches.size(), gaps.size()});

    for (std::size_t i = 0; i < n; ++i) {
        const int r = rows[i].r;
        // The climb tops out exactly at the arch extreme.
        rep.add("stair.peak_is_v_plus", r, rows[i].peak == arches[i].v_plus, false);

        // Singleton column: c_{r,1} = (4^r - 1) / 3.
        const std::int64_t want_c1 = ((std::int64_t{1} << (2 * r)) - 1) / 3;
        rep.add("stair.singleton_column", r, c1(rows[i]) == want_c1, false,
                "c1 = " + std::to_string(c1(rows[i])));

        // First-max identity against the previous arch width.
        if (i >= 1)
            rep.add("stair.first_max", r,
                    rows[i].tau + arches[i].v_plus == 4 * arches[i - 1].a, false,
                    "tau = " + std::to_string(rows[i].tau));

        if (i + 1 < n) {
            const StaircaseRow& next = rows[i + 1];
            // Triangle recursion: each deeper row cumulates the one above.
            bool rec_ok = true;
            const std::int64_t lmax =
                std::max<std::int64_t>(static_cast<std::int64_t>(next.c.size()),
                                       static_cast<std::int64_t>(rows[i].c.size()) + 1);
            for (std::int64_t l = 2; l <= lmax; ++l) {
                std::int64_t acc = 0;
                for (std::int64_t m = l - 1;
                     m <= static_cast<std::int64_t>(rows[i].c.size()); ++m)
                    acc += rows[i].c[static_cast<std::size_t>(m - 1)];
                const std::int64_t got =
                    l <= static_cast<std::int64_t>(next.c.size())
                        ? next.c[static_cast<std::size_t>(l - 1)]
                        : 0;
                if (got != acc) {
                    rec_ok = false;
                    break;
                }
            }
            rep.add("stair.recursion", r, rec_ok, false);

            // Equations A and B tie the next singleton count to this level's
            // gap argmax and arch data; nu is the next row's long-run count.
            const std::int64_t jstar = gaps[i].first_argmax;
            rep.add("stair.equation_a", r,
                    c1(next) - jstar == arches[i].v_plus - 1, false);
            rep.add("stair.equation_b", r,
                    c1(next) + next.runs_ge2 == arches[i].a - arches[i].v_plus, false);
            rep.add("stair.nu_eq_jstar", r, next.runs_ge2 == jstar, true,
                    "nu = " + std::to_string(next.runs_ge2) + ", j* = " +
                        std::to_string(jstar));
        }
    }
    return rep;
}

// ------------------------------------------------------------- record point

RecordReport record_claim_check(const BitWord& p, const BitWord& n,
                                const MachineTrace& law1_trace,
                                const BitWord& p_next, const MachineTrace& law2_trace,
                                const StaircaseRow& row, const StaircaseRow& row_next,
                                const Arch& arch, std::int64_t v_plus_next,
                                std::int64_t jstar, std::int64_t jstar_next) {
    if (law1_trace.size() != n.size() + 1)
        throw TraceMissing("law 1 trace does not cover the negative step word");
    if (law2_trace.size() != p_next.size() + 1)
        throw TraceMissing("law 2 trace does not cover the next positive word");

    RecordReport rr;
    rr.r = arch.r;

    // The slow head's record index: how much of n the law-2 machine had
    // consumed on tape S1 when the output reached its peak.
    const std::size_t tau_next = static_cast<std::size_t>(row_next.tau);
    rr.T = law2_trace[tau_next].j - 1;
    rr.i_peak = law2_trace[tau_next].i;

    rr.align_trace = rr.T == 2 * arch.a - v_plus_next - 1 && rr.T == jstar_next - 1 &&
                     rr.i_peak == 2 * arch.a;

    // Record property with margin exactly 1; the empty maximum at T = 0
    // counts as -1, which keeps the margin claim uniform at level 0.
    const std::int64_t hT = n.height(static_cast<std::size_t>(rr.T));
    std::int64_t max_before = -1;
    bool no_overshoot = true;
    for (std::int64_t t = 0; t < rr.T; ++t) {
        const std::int64_t h = n.height(static_cast<std::size_t>(t));
        max_before = std::max(max_before, h);
        if (h > hT) no_overshoot = false;
    }
    rr.margin = hT - max_before;
    rr.record_ok = no_overshoot;

    // Split records via the law-1 heads inside p.
    const std::int64_t aT = law1_trace[static_cast<std::size_t>(rr.T)].i;
    const std::int64_t bT = law1_trace[static_cast<std::size_t>(rr.T)].j;
    const std::int64_t ha_T = p.height(static_cast<std::size_t>(aT + 2));
    const std::int64_t hb_T = p.height(static_cast<std::size_t>(bT));
    rr.fact_a = true;
    rr.fact_b = true;
    for (std::int64_t t = 0; t <= rr.T; ++t) {
        const auto& step = law1_trace[static_cast<std::size_t>(t)];
        if (p.height(static_cast<std::size_t>(step.i + 2)) > ha_T) rr.fact_a = false;
        if (p.height(static_cast<std::size_t>(step.j)) > hb_T) rr.fact_b = false;
    }

    rr.align_fast_head = arch.r == 0 || aT + 2 == row.tau - 1;
    rr.align_height = hT == v_plus_next - 2 * arch.v_plus - 1;

    // First maximum of the depth profile and its head alignment.
    const HeightPeak n_peak = height_peak(n);
    const std::int64_t x_star = n_peak.first_argmax;
    const auto& xs = law1_trace[static_cast<std::size_t>(x_star)];
    rr.depth_max_aligned =
        x_star == 2 * arch.a - 2 && n_peak.max == 2 * arch.v_plus - 2 &&
        p.height(static_cast<std::size_t>(xs.i + 2)) == arch.v_plus &&
        p.height(static_cast<std::size_t>(xs.j)) == arch.v_plus && xs.j == row.tau &&
        xs.i + 2 == 2 * arch.a - row.tau;

    // Ballot form of fact B on Omega = p[0 : bT), reversed runs.
    {
        std::vector<std::int64_t> zs, os;  // 0-run and 1-run lengths in order
        std::int64_t run = 0;
        int cur = 0;
        zs.push_back(0);  // Omega starts with a 0-run when nonempty
        for (std::int64_t t = 0; t < bT; ++t) {
            const int b = p.bit(static_cast<std::size_t>(t));
            if (b == cur) {
                ++run;
            } else {
                (cur == 0 ? zs.back() : os.back()) = run;
                if (b == 0)
                    zs.push_back(0);
                else
                    os.push_back(0);
                cur = b;
                run = 1;
            }
        }
        if (bT > 0) (cur == 0 ? zs.back() : os.back()) = run;
        if (cur == 1) zs.push_back(0);  // empty trailing 0-run
        // zs has one more entry than os; reversed partial sums must keep a
        // slack of at least 3 at every nontrivial boundary.
        const std::size_t m = os.size();
        rr.ballot_interior_ok = true;
        rr.ballot_min_slack = 0;
        std::int64_t slack = 0;
        for (std::size_t i = 1; i <= m; ++i) {
            slack += zs[m + 1 - i] - os[m - i];
            if (i == 1 || slack < rr.ballot_min_slack) rr.ballot_min_slack = slack;
            if (slack < 3) rr.ballot_interior_ok = false;
        }
        rr.ballot_terminal = 0;  // the end-of-word boundary has an empty suffix
    }

    // The ones of tape S0 consumed up to the peak count the next row's runs.
    {
        BitWord::Builder s0(n.size() + 3);
        s0.push(0);
        s0.push(0);
        for (std::size_t k = 0; k < n.size(); ++k) s0.push(n.bit(k));
        s0.push(1);
        const BitWord s0w = s0.freeze();
        const std::int64_t ones_prefix =
            rr.i_peak - s0w.zeros_prefix(static_cast<std::size_t>(rr.i_peak));
        rr.runs_via_s0 = c1(row_next) + row_next.runs_ge2 == ones_prefix;
    }

    rr.nu_eq_jstar = row_next.runs_ge2 == jstar;

    rr.conditional = !(rr.align_trace && rr.record_ok && rr.margin == 1 && rr.fact_a &&
                       rr.fact_b && rr.ballot_interior_ok && rr.align_fast_head &&
                       rr.align_height && rr.depth_max_aligned && rr.nu_eq_jstar &&
                       rr.runs_via_s0);
    return rr;
}

// -------------------------------------------------------------------- depth

Report depth_check(const BitWord& p, const BitWord& n, const MachineTrace& law1_trace,
                   const Arch& arch, const StaircaseRow& row) {
    if (law1_trace.size() != n.size() + 1)
        throw TraceMissing("law 1 trace does not cover the negative step word");
    Report rep;

    // Exhaustive: the depth of n at x is the sum of the two head heights in
    // p, less the constant 2, at every position.
    std::int64_t bad = 0;
    for (std::size_t x = 0; x <= n.size(); ++x) {
        const auto& step = law1_trace[x];
        const std::int64_t want = p.height(static_cast<std::size_t>(step.i + 2)) +
                                  p.height(static_cast<std::size_t>(step.j)) - 2;
        if (n.height(x) != want) ++bad;
    }
    rep.add("depth.head_sum_identity", arch.r, bad == 0, false,
            std::to_string(bad) + " failures");

    const HeightPeak peak = height_peak(n);
    rep.add("depth.max_doubling", arch.r, peak.max == 2 * arch.v_plus - 2, false,
            "max = " + std::to_string(peak.max));

    const auto& xs = law1_trace[static_cast<std::size_t>(peak.first_argmax)];
    rep.add("depth.max_heads_aligned", arch.r,
            peak.first_argmax == 2 * arch.a - 2 &&
                p.height(static_cast<std::size_t>(xs.i + 2)) == arch.v_plus &&
                p.height(static_cast<std::size_t>(xs.j)) == arch.v_plus &&
                xs.j == row.tau,
            true, "first argmax = " + std::to_string(peak.first_argmax));
    return rep;
}

// ----------------------------------------------------------------- envelope

std::vector<double> envelope_peaks(const SequenceTrack& t,
                                   const std::vector<Arch>& arches) {
    std::vector<double> peaks;
    peaks.reserve(arches.size());
    for (const Arch& arch : arches) {
        const std::int64_t lo = 2 * arch.u;
        const std::int64_t hi = std::min<std::int64_t>(2 * arch.u_next - 1, t.n_max());
        if (lo > t.n_max())
            throw InsufficientRange("sequence ends before arch window " +
                                    std::to_string(arch.r));
        double peak = 0.0;
        for (std::int64_t n = lo; n <= hi; ++n) {
            const double fluct =
                std::fabs(static_cast<double>(t(n)) / static_cast<double>(n) - 0.5);
            const double scaled = fluct * std::sqrt(std::log2(static_cast<double>(n)));
            if (scaled > peak) peak = scaled;
        }
        peaks.push_back(peak);
    }
    return peaks;
}

}  // namespace qseq
