// Acceptance suite.  Fifteen criteria, each printing exactly one verdict
// line; a failed criterion also lists what broke.  The process exit code is
// the number of failed criteria, so the suite doubles as a ctest gate.
//
// All expected numbers below were frozen from an independent reference
// implementation before this library was written; none is produced by the
// code under test.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "qseq/amplitude_analysis.hpp"
#include "qseq/arch_decomposition.hpp"
#include "qseq/binomial.hpp"
#include "qseq/comparison.hpp"
#include "qseq/core_sequences.hpp"
#include "qseq/frequency_analysis.hpp"
#include "qseq/word_machine.hpp"

using namespace qseq;

namespace {

constexpr std::int64_t kNMax = 699034;  // reaches u_8 + 1 index pairs
constexpr int kRMax = 7;

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> notes;

    Criterion(int id_, std::string title_) : id(id_), title(std::move(title_)) {}

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

struct LevelData {
    BitWord p, n;
    GapProfile gap;
    StaircaseRow row;
};

// Everything the criteria share, computed once.
struct World {
    SequenceTrack t;
    ParityTracks tracks;
    std::vector<Arch> arches;
    MultiplicityTable fa, fb;
    std::vector<BlockCounts> blocks;
    std::vector<LevelData> lv;
};

bool words_equal(const BitWord& a, const char* s) { return a.str() == s; }

}  // namespace

int main() {
    std::vector<Criterion> out;
    World w;

    try {
        w.t = generate_qtilde(kNMax);
        w.tracks = parity_split(w.t);
        w.arches = detect_arches(w.tracks, kRMax);
        w.fa = visit_multiplicities(w.tracks.A);
        w.fb = visit_multiplicities(w.tracks.B);
        for (int k = 0; k <= 7; ++k) w.blocks.push_back(block_table(w.fa, w.fb, k));
        for (int r = 0; r <= kRMax; ++r) {
            LevelData d;
            const StepWords sw = step_words(w.tracks, w.arches[static_cast<std::size_t>(r)]);
            d.p = sw.p;
            d.n = sw.n;
            d.gap = gap_profile(d.p);
            d.row = staircase_row(d.p, r);
            w.lv.push_back(std::move(d));
        }
    } catch (const Error& e) {
        std::cout << "setup failed: " << e.what() << "\n";
        return 15;
    }

    const std::vector<std::int64_t> gold_a = {3, 11, 43, 171, 683, 2731, 10923, 43691};
    const std::vector<std::int64_t> gold_u = {4, 19, 82, 337, 1360, 5455, 21838, 87373};
    const std::vector<std::int64_t> gold_v = {10, 41, 168, 679, 2726, 10917, 43684, 174755};
    const std::vector<std::int64_t> gold_vp = {2, 5, 15, 50, 176, 638, 2354, 8789};
    const std::vector<std::int64_t> gold_vm = {2, 8, 28, 98, 350, 1274, 4706, 17576};
    const std::vector<std::int64_t> gold_jstar = {0, 1, 7, 36, 166, 728, 3108, 13057};
    const std::vector<std::int64_t> gold_tau = {2, 7, 29, 122, 508, 2094, 8570, 34903};

    // ---- 1: the introductory table ------------------------------------
    {
        Criterion c{1, "parity split reproduces the introductory table"};
        const SequenceTrack t24 = generate_qtilde(24);
        const ParityTracks p24 = parity_split(t24);
        const std::vector<std::int64_t> seq = {1, 1, 1, 3, 3, 3, 5,  5,  5,  7,  5,  9,
                                               7, 9, 7, 11, 9, 11, 11, 11, 13, 11, 15, 13};
        for (std::int64_t n = 1; n <= 24; ++n)
            c.require(t24(n) == seq[static_cast<std::size_t>(n - 1)],
                      "value at n = " + std::to_string(n));
        const std::vector<std::int64_t> a = {1, 1, 2, 3, 3, 3, 4, 4, 5, 6, 7, 8};
        const std::vector<std::int64_t> b = {1, 2, 2, 3, 4, 5, 5, 6, 6, 6, 6, 7};
        const std::vector<std::int64_t> sig = {1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 3};
        const std::vector<std::int64_t> del = {0, 1, 0, 0, 1, 2, 1, 2, 1, 0, -1, -1};
        const std::vector<std::int64_t> da = {0, 1, 1, 0, 0, 1, 0, 1, 1, 1, 1};
        const std::vector<std::int64_t> db = {1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 1};
        for (std::int64_t m = 1; m <= 12; ++m) {
            const auto i = static_cast<std::size_t>(m - 1);
            c.require(p24.A(m) == a[i] && p24.B(m) == b[i], "tracks at m = " + std::to_string(m));
            c.require(p24.sigma(m) == sig[i] && p24.delta(m) == del[i],
                      "split tracks at m = " + std::to_string(m));
            if (m >= 2) {
                c.require(p24.A(m) - p24.A(m - 1) == da[i - 1] &&
                              p24.B(m) - p24.B(m - 1) == db[i - 1],
                          "steps into m = " + std::to_string(m));
            }
        }
        out.push_back(c);
    }

    // ---- 2: skeleton table and closed forms ---------------------------
    {
        Criterion c{2, "arch detection matches the skeleton closed forms"};
        for (int r = 0; r <= kRMax; ++r) {
            const auto i = static_cast<std::size_t>(r);
            const Arch& arch = w.arches[i];
            const Arch sk = skeleton(r);
            c.require(arch.a == gold_a[i] && arch.u == gold_u[i] && arch.v == gold_v[i],
                      "boundaries at level " + std::to_string(r));
            c.require(arch.a == sk.a && arch.u == sk.u && arch.v == sk.v &&
                          arch.u_next == sk.u_next,
                      "closed form at level " + std::to_string(r));
            c.require(arch.v_plus == gold_vp[i] && arch.v_minus_abs == gold_vm[i],
                      "extremes at level " + std::to_string(r));
            c.require(arch.v - arch.u == 2 * arch.a, "width at level " + std::to_string(r));
        }
        c.require(skeleton(7).u_next == 349516, "level-8 boundary");
        out.push_back(c);
    }

    // ---- 3: anchors ----------------------------------------------------
    {
        Criterion c{3, "midpoint anchor t(2a) = a at every level"};
        for (const Arch& arch : w.arches)
            c.require(w.t(2 * arch.a) == arch.a, "anchor at level " + std::to_string(arch.r));
        out.push_back(c);
    }

    // ---- 4: the two laws ----------------------------------------------
    {
        Criterion c{4, "interleave laws rebuild each step word bit for bit"};
        c.require(words_equal(w.lv[0].p, "001011"), "base positive word");
        c.require(words_equal(w.lv[0].n, "010011011"), "base negative word");
        c.require(words_equal(w.lv[1].p, "0001000101100101110111"), "level-1 positive word");
        c.require(interleave(BitWord::from_string("010"), BitWord::from_string("11"), 0)
                      .word.str() == "01110",
                  "worked interleave example");
        for (int r = 0; r < kRMax; ++r) {
            const auto i = static_cast<std::size_t>(r);
            c.require(law1(w.lv[i].p).word == w.lv[i].n,
                      "law 1 at level " + std::to_string(r));
            c.require(law2(w.lv[i].n).word == w.lv[i + 1].p,
                      "law 2 at level " + std::to_string(r));
        }
        out.push_back(c);
    }

    // ---- 5: word structure --------------------------------------------
    {
        Criterion c{5, "step words keep their structural shape at every level"};
        for (int r = 0; r <= kRMax; ++r) {
            const auto i = static_cast<std::size_t>(r);
            const Arch& arch = w.arches[i];
            const WordDiagnostics dp = word_diagnostics(w.lv[i].p);
            c.require(dp.length == static_cast<std::size_t>(2 * arch.a) && dp.balanced,
                      "positive balance at level " + std::to_string(r));
            c.require(dp.anti_palindromic, "anti-palindrome at level " + std::to_string(r));
            c.require(dp.initial_zero_run == r + 2 && dp.final_one_run == r + 2,
                      "boundary runs at level " + std::to_string(r));
            c.require(dp.interior_positive, "interior height at level " + std::to_string(r));
            c.require(dp.height_palindromic, "height palindrome at level " + std::to_string(r));

            const WordDiagnostics dn = word_diagnostics(w.lv[i].n);
            c.require(dn.length == static_cast<std::size_t>(4 * arch.a - 3),
                      "negative length at level " + std::to_string(r));
            c.require(dn.initial_zero_run == r + 1,
                      "negative zero run at level " + std::to_string(r));
            if (r < kRMax)
                c.require(w.lv[i].n.ones() == 2 * arch.a - 1,
                          "negative ones count at level " + std::to_string(r));
        }
        out.push_back(c);
    }

    // ---- 6: gap profiles ----------------------------------------------
    {
        Criterion c{6, "gap profiles with exact slack-height identity"};
        c.require(w.lv[0].gap.gaps == std::vector<std::int64_t>{2, 2, 1}, "base gaps");
        c.require(w.lv[1].gap.gaps ==
                      std::vector<std::int64_t>{3, 4, 2, 1, 3, 2, 1, 1, 2, 1, 1},
                  "level-1 gaps");
        for (int r = 0; r <= kRMax; ++r) {
            const auto i = static_cast<std::size_t>(r);
            const GapProfile& g = w.lv[i].gap;
            // Slack vs height, re-derived here rather than trusted from the
            // constructor.
            bool slack_ok = true;
            for (std::size_t j = 0; j < g.ones_pos.size(); ++j)
                if (g.slack[j] !=
                    w.lv[i].p.height(static_cast<std::size_t>(g.ones_pos[j])) - 2)
                    slack_ok = false;
            c.require(slack_ok, "slack residual at level " + std::to_string(r));
            c.require(g.max_slack + 2 == w.arches[i].v_plus,
                      "extreme via gaps at level " + std::to_string(r));
            c.require(g.first_argmax == gold_jstar[i],
                      "slack argmax at level " + std::to_string(r));
        }
        out.push_back(c);
    }

    // ---- 7: block tables ----------------------------------------------
    {
        Criterion c{7, "dyadic block tables obey the row and moment laws"};
        const std::vector<std::vector<std::int64_t>> s_rows = {
            {12, 6, 3, 2, 1},
            {48, 24, 12, 6, 3, 2, 1},
            {192, 96, 48, 24, 12, 6, 3, 2, 1},
            {768, 384, 192, 96, 48, 24, 12, 6, 3, 2, 1},
        };
        const std::vector<std::vector<std::int64_t>> d_rows = {
            {-2, 0, 1, 0, 1},
            {-6, 0, 2, 2, 1, 0, 1},
            {-20, 0, 6, 6, 4, 2, 1, 0, 1},
            {-70, 0, 20, 20, 14, 8, 4, 2, 1, 0, 1},
        };
        for (int k = 1; k <= 4; ++k) {
            const BlockCounts& bc = w.blocks[static_cast<std::size_t>(k)];
            c.require(bc.s_row == s_rows[static_cast<std::size_t>(k - 1)],
                      "symmetrized row at block " + std::to_string(k));
            c.require(bc.delta_row == d_rows[static_cast<std::size_t>(k - 1)],
                      "skew row at block " + std::to_string(k));
        }
        const Report rep = verify_frequency_laws(w.blocks);
        for (const auto& item : rep.items)
            c.require(item.pass, item.check + " at block " + std::to_string(item.level));
        out.push_back(c);
    }

    // ---- 8: block sums -------------------------------------------------
    {
        Criterion c{8, "block sums of the multiplicities split the skew evenly"};
        for (const BlockCounts& bc : w.blocks) {
            const std::int64_t width = bc.hi - bc.lo + 1;
            c.require(bc.sum_fa == 2 * width - 1 + bc.D / 2 &&
                          bc.sum_fb == 2 * width - 1 - bc.D / 2,
                      "block " + std::to_string(bc.k));
        }
        out.push_back(c);
    }

    // ---- 9: lag --------------------------------------------------------
    {
        Criterion c{9, "entry-time lag accumulates the block skews"};
        const LagAnalysis lag =
            lag_analysis(w.tracks, w.arches, w.fa, w.fb, w.blocks, 7, 6);
        const std::vector<std::int64_t> gold_lag = {2, 8, 28, 98, 350, 1274};
        c.require(lag.records.size() >= 6, "lag records reach K = 6");
        for (std::size_t i = 0; i < 6 && i < lag.records.size(); ++i)
            c.require(lag.records[i].lag == gold_lag[i],
                      "lag at K = " + std::to_string(i + 1));
        for (const auto& item : lag.report.items) {
            if (item.check == "lag.excursion_equality" && item.level > 6) continue;
            c.require(item.pass, item.check + " at " + std::to_string(item.level));
        }
        out.push_back(c);
    }

    // ---- 10: staircase -------------------------------------------------
    {
        Criterion c{10, "staircase triangle rows, recursion, and growth"};
        const std::vector<std::vector<std::int64_t>> gold_rows = {
            {1},
            {5, 1},
            {21, 6, 1},
            {85, 28, 7, 1},
            {341, 121, 36, 8, 1},
            {1365, 507, 166, 45, 9, 1},
            {5461, 2093, 728, 221, 55, 10, 1},
        };
        for (int r = 1; r <= kRMax; ++r) {
            const auto i = static_cast<std::size_t>(r);
            c.require(w.lv[i].row.c == gold_rows[i - 1],
                      "triangle row at level " + std::to_string(r));
            c.require(w.lv[i].row.tau == gold_tau[i], "climb length at level " + std::to_string(r));
        }
        std::vector<StaircaseRow> rows;
        std::vector<GapProfile> gaps;
        for (const auto& d : w.lv) {
            rows.push_back(d.row);
            gaps.push_back(d.gap);
        }
        const Report rep = verify_staircase(rows, w.arches, gaps);
        for (const auto& item : rep.items)
            c.require(item.pass, item.check + " at level " + std::to_string(item.level));
        for (int r = 1; r <= kRMax; ++r) {
            const auto i = static_cast<std::size_t>(r);
            c.require(w.arches[i].v_plus - w.arches[i - 1].v_plus == binomial(2 * r + 1, r),
                      "growth binomial at level " + std::to_string(r));
        }
        out.push_back(c);
    }

    // ---- 11: record family --------------------------------------------
    {
        Criterion c{11, "record point, facts, ballot, and depth alignment"};
        for (int r = 0; r < kRMax; ++r) {
            const auto i = static_cast<std::size_t>(r);
            const InterleaveResult l1 = law1(w.lv[i].p);
            const InterleaveResult l2 = law2(w.lv[i].n);
            const std::string at = " at level " + std::to_string(r);
            if (l2.word != w.lv[i + 1].p) {
                c.require(false, "law-2 output drifted" + at);
                continue;
            }
            const RecordReport rr = record_claim_check(
                w.lv[i].p, w.lv[i].n, l1.trace, l2.word, l2.trace, w.lv[i].row,
                w.lv[i + 1].row, w.arches[i], w.arches[i + 1].v_plus, gold_jstar[i],
                gold_jstar[i + 1]);
            c.require(rr.margin == 1, "record margin" + at);
            c.require(rr.record_ok, "record property" + at);
            c.require(rr.fact_a, "fast-head fact" + at);
            c.require(rr.fact_b, "slow-head fact" + at);
            c.require(rr.ballot_interior_ok && rr.ballot_terminal == 0, "ballot slacks" + at);
            c.require(rr.align_trace, "trace alignment" + at);
            c.require(rr.align_fast_head, "fast-head alignment" + at);
            c.require(rr.align_height, "record height value" + at);
            c.require(rr.depth_max_aligned, "depth max alignment" + at);
            c.require(rr.nu_eq_jstar, "long-run count vs slack argmax" + at);
            c.require(rr.runs_via_s0, "run count via consumed tape" + at);
            c.require(!rr.conditional, "conditional flag clear" + at);

            const Report dep = depth_check(w.lv[i].p, w.lv[i].n, l1.trace, w.arches[i],
                                           w.lv[i].row);
            for (const auto& item : dep.items) c.require(item.pass, item.check + at);
        }
        // The depth identity and the extreme doubling also hold at the top
        // level, where no successor word exists to anchor a record point.
        const InterleaveResult l1 = law1(w.lv[7].p);
        const Report dep = depth_check(w.lv[7].p, w.lv[7].n, l1.trace, w.arches[7],
                                       w.lv[7].row);
        for (const auto& item : dep.items)
            if (!item.conjectural) c.require(item.pass, item.check + " at level 7");
        out.push_back(c);
    }

    // ---- 12: unperturbed companion ------------------------------------
    {
        Criterion c{12, "unperturbed companion gap tracks the excursion scale"};
        const QResult q = generate_q(200000);
        c.require(!q.death.has_value(), "companion survives to 200000");
        const ComparisonReport cmp = compare_sequences(w.t, q, w.arches);
        const std::vector<std::int64_t> gold_diff = {79, 264, 892, 3231, 13486};
        for (int r = 2; r <= 6; ++r) {
            bool found = false;
            for (const ComparisonRow& row : cmp.rows) {
                if (row.r != r) continue;
                found = true;
                c.require(row.complete, "window complete at level " + std::to_string(r));
                c.require(row.max_diff == gold_diff[static_cast<std::size_t>(r - 2)],
                          "max gap at level " + std::to_string(r));
                c.require(row.ratio >= 5.0 && row.ratio <= 5.8,
                          "ratio band at level " + std::to_string(r));
            }
            c.require(found, "comparison row at level " + std::to_string(r));
        }
        out.push_back(c);
    }

    // ---- 13: envelope --------------------------------------------------
    {
        Criterion c{13, "scaled fluctuation envelope shrinks down the levels"};
        const std::vector<double> peaks = envelope_peaks(w.t, w.arches);
        const std::vector<double> gold = {0.47335, 0.32140, 0.22637, 0.18454,
                                          0.16690, 0.15893, 0.15476, 0.15219};
        c.require(peaks.size() == 8, "one peak per level");
        for (std::size_t i = 0; i < peaks.size(); ++i)
            c.require(std::fabs(peaks[i] - gold[i]) < 1e-3,
                      "peak value at level " + std::to_string(i));
        for (std::size_t i = 3; i + 1 < peaks.size(); ++i)
            c.require(peaks[i + 1] < peaks[i],
                      "monotone shrink into level " + std::to_string(i + 1));
        c.require(peaks[6] > 0.13 && peaks[6] < 0.17, "level-6 peak within band");
        out.push_back(c);
    }

    // ---- 14: self-composition companion --------------------------------
    {
        Criterion c{14, "self-composition companion holds its limit ratio"};
        const SequenceTrack cseq = generate_conway_perturbed(10000);
        const double ratio = ratio_at(cseq, 10000);
        c.require(ratio > 0.299 && ratio < 0.319, "ratio within band");
        c.require(std::fabs(ratio - 0.3109) < 1e-4, "ratio value");
        out.push_back(c);
    }

    // ---- 15: exhaustive machine properties -----------------------------
    {
        Criterion c{15, "round-trip, additivity, reconstruction, stall rule"};
        for (int r = 0; r <= kRMax; ++r) {
            const auto i = static_cast<std::size_t>(r);
            const std::string at = " at level " + std::to_string(r);
            for (const BitWord* word : {&w.lv[i].p, &w.lv[i].n}) {
                const auto [e0, e1] = extract(*word);
                c.require(interleave(e0, e1, word->bit(0)).word == *word,
                          "extraction round-trip" + at);
            }
        }
        for (int r = 0; r < kRMax; ++r) {
            const auto i = static_cast<std::size_t>(r);
            const std::string at = " at level " + std::to_string(r);
            // Height additivity along both law traces, every position.
            const BitWord& p = w.lv[i].p;
            BitWord::Builder fb_(p.size() - 2), sb(p.size() - 1);
            for (std::size_t k = 2; k < p.size(); ++k) fb_.push(p.bit(k));
            for (std::size_t k = 0; k + 1 < p.size(); ++k) sb.push(p.bit(k));
            const BitWord fast = fb_.freeze(), slow = sb.freeze();
            const InterleaveResult l1 = law1(p);
            bool add1 = true;
            for (std::size_t x = 0; x <= l1.word.size(); ++x) {
                const auto& s = l1.trace[x];
                if (l1.word.height(x) != fast.height(static_cast<std::size_t>(s.i)) +
                                             slow.height(static_cast<std::size_t>(s.j)))
                    add1 = false;
            }
            c.require(add1, "height additivity in law 1" + at);

            const BitWord& n = w.lv[i].n;
            BitWord::Builder s0b(n.size() + 3), s1b(n.size() + 1);
            s0b.push(0);
            s0b.push(0);
            for (std::size_t k = 0; k < n.size(); ++k) s0b.push(n.bit(k));
            s0b.push(1);
            s1b.push(0);
            for (std::size_t k = 0; k < n.size(); ++k) s1b.push(n.bit(k));
            const BitWord s0 = s0b.freeze(), s1 = s1b.freeze();
            const InterleaveResult l2 = law2(n);
            bool add2 = true;
            for (std::size_t x = 0; x <= l2.word.size(); ++x) {
                const auto& s = l2.trace[x];
                if (l2.word.height(x) != s0.height(static_cast<std::size_t>(s.i)) +
                                            s1.height(static_cast<std::size_t>(s.j)))
                    add2 = false;
            }
            c.require(add2, "height additivity in law 2" + at);
        }
        // Reconstruction, oddness, and bounds across the whole range.
        bool recon = true, odd = true, bounds = true;
        for (std::int64_t m = 1; m <= w.tracks.m_max; ++m) {
            const std::int64_t sig = w.tracks.sigma(m), del = w.tracks.delta(m);
            if (w.t(2 * m) != m - 1 + sig + del) recon = false;
            if (w.t(2 * m - 1) != m - 1 + sig - del) recon = false;
        }
        for (std::int64_t n = 1; n <= w.t.n_max(); ++n) {
            if (w.t(n) % 2 != 1) odd = false;
            if (w.t(n) < 1 || w.t(n) > n) bounds = false;
        }
        c.require(recon, "reconstruction identity over the full range");
        c.require(odd, "oddness over the full range");
        c.require(bounds, "bounds over the full range");

        const Report stall = stall_rule_check(w.tracks, w.arches);
        for (const auto& item : stall.items)
            c.require(item.pass, item.check + " at level " + std::to_string(item.level));
        out.push_back(c);
    }

    // ---- verdicts ------------------------------------------------------
    int failed = 0;
    for (const Criterion& c : out) {
        std::cout << "criterion " << (c.id < 10 ? "0" : "") << c.id << ": "
                  << (c.pass ? "PASS" : "FAIL") << " - " << c.title << "\n";
        if (!c.pass) {
            ++failed;
            std::size_t shown = 0;
            for (const auto& note : c.notes) {
                std::cout << "    " << note << "\n";
                if (++shown == 8 && c.notes.size() > 8) {
                    std::cout << "    ... " << (c.notes.size() - 8) << " more\n";
                    break;
                }
            }
        }
    }
    std::cout << out.size() - static_cast<std::size_t>(failed) << "/" << out.size()
              << " criteria passed\n";
    return failed;
}
