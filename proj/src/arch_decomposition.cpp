#include "qseq/arch_decomposition.hpp"

#include <string>

#include "qseq/binomial.hpp"

namespace qseq {

// ------------------------------------------------------------------ skeleton

Arch skeleton(int r) {
    if (r < 0) throw Error("arch level must be nonnegative");
    // u_next needs a_{r+1}; (2*4^(r+2)+1)/3 must fit in 64 bits.
    if (r > 28) throw Overflow("arch skeleton beyond level 28 exceeds 64 bits");
    const auto a_of = [](int level) {
        const std::int64_t pow4 = std::int64_t{1} << (2 * (level + 1));
        return (2 * pow4 + 1) / 3;
    };
    Arch s;
    s.r = r;
    s.a = a_of(r);
    s.u = 2 * s.a - r - 2;
    s.v = s.u + 2 * s.a;
    s.u_next = 2 * a_of(r + 1) - (r + 1) - 2;
    return s;
}

// ----------------------------------------------------------------- detection

namespace {

// Scan delta from position `from`+1 to its next zero, requiring a strict
// interior sign, and record the extreme excursion.  Returns the zero position.
std::int64_t scan_to_zero(const SequenceTrack& delta, std::int64_t m_max,
                          std::int64_t from, int sign, int r, const char* what,
                          std::int64_t& extreme) {
    extreme = 0;
    std::int64_t m = from + 1;
    for (; m <= m_max; ++m) {
        const std::int64_t d = delta(m);
        if (d == 0) return m;
        if ((sign > 0 && d < 0) || (sign < 0 && d > 0))
            throw SkeletonMismatch(r, std::string(what) + " interior sign at m = " +
                                          std::to_string(m));
        extreme = std::max(extreme, sign > 0 ? d : -d);
    }
    throw InsufficientRange("delta track ends before the " + std::string(what) +
                            " boundary of level " + std::to_string(r));
}

}  // namespace

std::vector<Arch> detect_arches(const ParityTracks& tracks, int r_max) {
    if (r_max < 0) throw Error("r_max must be nonnegative");
    const auto& delta = tracks.delta;
    if (tracks.m_max < 5) throw InsufficientRange("need m_max >= 5 to seed detection");

    std::vector<Arch> out;
    out.reserve(static_cast<std::size_t>(r_max) + 1);

    // Positions m < 4 are the pre-arch ramp; the first arch opens at u_0 = 4.
    std::int64_t u = 4;
    if (delta(u) != 0) throw SkeletonMismatch(0, "seed u_0");

    for (int r = 0; r <= r_max; ++r) {
        const Arch sk = skeleton(r);
        if (u != sk.u) throw SkeletonMismatch(r, "u");

        Arch arch;
        arch.r = r;
        arch.u = u;
        arch.v = scan_to_zero(delta, tracks.m_max, u, +1, r, "positive", arch.v_plus);
        if (arch.v != sk.v) throw SkeletonMismatch(r, "v");
        arch.a = (arch.v - arch.u) / 2;
        if (arch.a != sk.a) throw SkeletonMismatch(r, "a");
        arch.u_next =
            scan_to_zero(delta, tracks.m_max, arch.v, -1, r, "negative", arch.v_minus_abs);
        if (arch.u_next != sk.u_next) throw SkeletonMismatch(r, "u_next");

        out.push_back(arch);
        u = arch.u_next;
    }
    return out;
}

// ---------------------------------------------------------------- identities

Report verify_arch_identities(const SequenceTrack& t, const ParityTracks& tracks,
                              const std::vector<Arch>& arches,
                              const MultiplicityTable* fa, const MultiplicityTable* fb) {
    Report rep;

    // The ramp before the first arch is fixed data: delta(1..3) = 0, 1, 0.
    rep.add("arch.prearch_ramp", -1,
            tracks.delta(1) == 0 && tracks.delta(2) == 1 && tracks.delta(3) == 0, false);

    std::int64_t binom_sum = 0;  // sum of C(2k+1, k) for k <= r
    for (const Arch& arch : arches) {
        const int r = arch.r;

        // Anchor value at the arch midpoint index.
        if (t.n_max() >= 2 * arch.a)
            rep.add("arch.anchor", r, t(2 * arch.a) == arch.a, false,
                    "t(2a) = " + std::to_string(t(2 * arch.a)));

        // The positive excursion reads the same from both ends.
        bool palin = true;
        for (std::int64_t s = 0; s <= 2 * arch.a && palin; ++s)
            palin = tracks.delta(arch.u + s) == tracks.delta(arch.v - s);
        rep.add("arch.excursion_palindrome", r, palin, false);

        // Extreme formulas.  The binomial sum for V+ is an observed law; the
        // doubling relation between the two extremes holds wherever checked.
        binom_sum += binomial(2 * r + 1, r);
        rep.add("arch.v_plus_formula", r, arch.v_plus == 1 + binom_sum, true,
                "V+ = " + std::to_string(arch.v_plus));
        rep.add("arch.v_minus_doubling", r, arch.v_minus_abs == 2 * arch.v_plus - 2,
                false, "|V-| = " + std::to_string(arch.v_minus_abs));
        if (r >= 1) {
            const std::int64_t w = arch.v_plus - arches[static_cast<std::size_t>(r) - 1].v_plus;
            rep.add("arch.growth_catalan", r, w == binomial(2 * r + 1, r), true,
                    "W = " + std::to_string(w));
        }

        // Boundary plateau rows, when multiplicity tables are supplied.
        if (fa != nullptr && r >= 1 && arch.a <= fa->complete_up_to)
            rep.add("arch.plateau_a", r, fa->F(arch.a) == 2 * r + 3, false,
                    "F_A(a) = " + std::to_string(fa->F(arch.a)));
        if (fb != nullptr && 2 * arch.a <= fb->complete_up_to)
            rep.add("arch.plateau_b", r, fb->F(2 * arch.a) == 2 * r + 4, false,
                    "F_B(2a) = " + std::to_string(fb->F(2 * arch.a)));
    }
    return rep;
}

// ----------------------------------------------------------------------- lag

LagAnalysis lag_analysis(const ParityTracks& tracks, const std::vector<Arch>& arches,
                         const MultiplicityTable& fa, const MultiplicityTable& fb,
                         const std::vector<BlockCounts>& blocks, int k_max,
                         int sweep_r_max) {
    LagAnalysis out;
    const auto lag = [&](std::int64_t v) { return fa.entry(v) - fb.entry(v); };

    out.report.add("lag.at_one", -1, lag(1) == 0, false);

    // Dyadic accumulation: the lag at 4^K telescopes the block skews.
    std::int64_t sum_d = 0;
    for (int K = 1; K <= k_max; ++K) {
        if (static_cast<std::size_t>(K) > blocks.size()) break;
        sum_d += blocks[static_cast<std::size_t>(K - 1)].D;
        const std::int64_t v = std::int64_t{1} << (2 * K);
        if (v > fa.complete_up_to + 1 || v > fb.complete_up_to + 1) break;
        const std::int64_t e = lag(v);
        out.records.push_back({K, e, sum_d});
        out.report.add("lag.dyadic_accumulation", K, e == sum_d,
                       false, "E = " + std::to_string(e));
    }

    // Per-level bound: twice the positive extreme dominates the skew total.
    std::int64_t sum_d_r = 0;
    for (const Arch& arch : arches) {
        if (static_cast<std::size_t>(arch.r) >= blocks.size()) break;
        sum_d_r += blocks[static_cast<std::size_t>(arch.r)].D;
        out.report.add("lag.excursion_bound", arch.r, 2 * arch.v_plus >= sum_d_r, false);
        out.report.add("lag.excursion_equality", arch.r,
                       arch.v_plus == sum_d_r / 2 + 1, true,
                       "V+ = " + std::to_string(arch.v_plus) + ", sum D/2 + 1 = " +
                           std::to_string(sum_d_r / 2 + 1));
    }

    // Excursion form of the lag at every interior value of each positive arch.
    for (const Arch& arch : arches) {
        if (arch.r > sweep_r_max) break;
        std::int64_t bad = 0;
        for (std::int64_t v = arch.a + 1; v < 2 * arch.a; ++v) {
            const std::int64_t e = lag(v);
            const std::int64_t rhs = tracks.delta(fb.entry(v)) + tracks.delta(fa.entry(v));
            if (e != rhs) ++bad;
        }
        out.report.add("lag.interior_excursion", arch.r, bad == 0, true,
                       std::to_string(bad) + " failures");
    }
    return out;
}

// ---------------------------------------------------------------- stall rule

Report stall_rule_check(const ParityTracks& tracks, const std::vector<Arch>& arches) {
    Report rep;
    const auto dA = [&](std::int64_t m) { return tracks.A(m + 1) - tracks.A(m); };
    for (const Arch& arch : arches) {
        std::int64_t bad = 0;
        for (std::int64_t m = arch.u + 1; m <= arch.v; ++m) {
            if (dA(m - 1) == 1 && dA(m - tracks.A(m - 1)) != 0) ++bad;
        }
        rep.add("arch.stall_rule", arch.r, bad == 0, false,
                std::to_string(bad) + " violations");
    }
    return rep;
}

}  // namespace qseq
