// Command-line front end for the sequence library.
//
// Subcommands:
//   seq        emit the sequence and its parity tracks
//   arches     emit the detected arch skeleton
//   words      emit step words and their gap profiles
//   freq       emit dyadic block tables
//   amplitude  emit staircase rows, record reports, and envelope peaks
//   verify     run every verifier in range and print the check grid
//   compare    run the unperturbed companion side by side
//
// Ranges are chosen by --r-max / --k-max and the needed sequence length is
// derived from them; --n-max overrides the derivation.  Table output is CSV
// by default, JSON with --format json; record reports are always JSON.
// Output is deterministic: rerunning a command into a fresh directory
// produces byte-identical files.
//
// Exit codes: 0 success (conjectural-observation failures print warnings but
// do not fail), 1 a proved identity failed verification, 2 configuration or
// range errors.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qseq/amplitude_analysis.hpp"
#include "qseq/arch_decomposition.hpp"
#include "qseq/comparison.hpp"
#include "qseq/core_sequences.hpp"
#include "qseq/frequency_analysis.hpp"
#include "qseq/word_machine.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace qseq;

namespace {

// ------------------------------------------------------------ output plumbing

struct Table {
    std::string name;                   // file basename without extension
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }
};

std::string num(std::int64_t v) { return std::to_string(v); }

std::string num(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

void write_table(const Table& t, const fs::path& dir, const std::string& format) {
    fs::create_directories(dir);
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : t.rows) {
            json obj;
            for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = r[i];
            rows.push_back(obj);
        }
        std::ofstream out(dir / (t.name + ".json"));
        out << rows.dump(2) << "\n";
        return;
    }
    std::ofstream out(dir / (t.name + ".csv"));
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << t.columns[i] << (i + 1 < t.columns.size() ? "," : "\n");
    for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.size(); ++i)
            out << r[i] << (i + 1 < r.size() ? "," : "\n");
}

// ----------------------------------------------------------- shared pipeline

// Sequence length that lets detection reach u_{r_max+1} with one index pair
// to spare.
std::int64_t n_for_levels(int r_max) { return 2 * (skeleton(r_max).u_next + 1); }

// Length that keeps the multiplicity tables complete through 4^(k_max+1)-1.
// The tracks grow like m/2, so triple the needed edge gives a solid margin.
std::int64_t n_for_blocks(int k_max) {
    std::int64_t edge = 1;
    for (int i = 0; i <= k_max + 1; ++i) edge *= 4;
    return 6 * edge;
}

struct Pipeline {
    SequenceTrack t;
    ParityTracks tracks;
    std::vector<Arch> arches;

    Pipeline(std::int64_t n_max, int r_max)
        : t(generate_qtilde(n_max)), tracks(parity_split(t)),
          arches(detect_arches(tracks, r_max)) {}
};

// Print conjectural-failure warnings; return the exit code for this report.
int settle(const Report& rep) {
    for (const auto& it : rep.items)
        if (!it.pass && it.conjectural)
            std::cout << "warning: observed regularity " << it.check << " broke at level "
                      << it.level << (it.detail.empty() ? "" : " (" + it.detail + ")")
                      << "\n";
    return rep.proved_pass() ? 0 : 1;
}

// --------------------------------------------------------------- subcommands

int run_seq(std::int64_t n_max, const fs::path& out, const std::string& format) {
    const SequenceTrack t = generate_qtilde(n_max);
    const ParityTracks tracks = parity_split(t);

    Table seq{"sequence", {"n", "value"}, {}};
    for (std::int64_t n = 1; n <= t.n_max(); ++n) seq.row({num(n), num(t(n))});
    write_table(seq, out, format);

    Table par{"parity", {"m", "a", "b", "sigma", "delta"}, {}};
    for (std::int64_t m = 1; m <= tracks.m_max; ++m)
        par.row({num(m), num(tracks.A(m)), num(tracks.B(m)), num(tracks.sigma(m)),
                 num(tracks.delta(m))});
    write_table(par, out, format);

    std::cout << "wrote sequence and parity tracks for n <= " << t.n_max() << " to "
              << out.string() << "\n";
    return 0;
}

int run_arches(std::int64_t n_max, int r_max, const fs::path& out,
               const std::string& format) {
    const Pipeline pl(n_max, r_max);
    Table tab{"arches", {"r", "a", "u", "v", "u_next", "v_plus", "v_minus_abs"}, {}};
    for (const Arch& arch : pl.arches)
        tab.row({num(static_cast<std::int64_t>(arch.r)), num(arch.a), num(arch.u),
                 num(arch.v), num(arch.u_next), num(arch.v_plus), num(arch.v_minus_abs)});
    write_table(tab, out, format);
    std::cout << "wrote " << pl.arches.size() << " arch levels to " << out.string() << "\n";
    return 0;
}

int run_words(std::int64_t n_max, int r_max, const fs::path& out,
              const std::string& format) {
    const Pipeline pl(n_max, r_max);
    Table words{"words", {"r", "kind", "length", "bits"}, {}};
    Table gaps{"gaps", {"r", "j", "ones_pos", "gap", "slack"}, {}};
    for (const Arch& arch : pl.arches) {
        const StepWords sw = step_words(pl.tracks, arch);
        const auto r = static_cast<std::int64_t>(arch.r);
        words.row({num(r), "p", num(static_cast<std::int64_t>(sw.p.size())), sw.p.str()});
        words.row({num(r), "n", num(static_cast<std::int64_t>(sw.n.size())), sw.n.str()});
        const GapProfile g = gap_profile(sw.p);
        for (std::size_t j = 0; j < g.gaps.size(); ++j)
            gaps.row({num(r), num(static_cast<std::int64_t>(j)), num(g.ones_pos[j]),
                      num(g.gaps[j]), num(g.slack[j])});
    }
    write_table(words, out, format);
    write_table(gaps, out, format);
    std::cout << "wrote step words and gap profiles for levels 0.." << r_max << " to "
              << out.string() << "\n";
    return 0;
}

int run_freq(std::int64_t n_max, int k_max, const fs::path& out,
             const std::string& format) {
    const SequenceTrack t = generate_qtilde(n_max);
    const ParityTracks tracks = parity_split(t);
    const MultiplicityTable fa = visit_multiplicities(tracks.A);
    const MultiplicityTable fb = visit_multiplicities(tracks.B);

    Table blocks{"blocks",
                 {"k", "lo", "hi", "d", "m", "sum_fa", "sum_fb", "max_mult"}, {}};
    Table rows{"block_rows", {"k", "r", "a", "b", "s", "delta"}, {}};
    for (int k = 0; k <= k_max; ++k) {
        const BlockCounts bc = block_table(fa, fb, k);
        blocks.row({num(static_cast<std::int64_t>(k)), num(bc.lo), num(bc.hi), num(bc.D),
                    num(bc.M), num(bc.sum_fa), num(bc.sum_fb), num(bc.max_mult())});
        for (std::int64_t r = 1; r <= bc.max_mult(); ++r) {
            const auto i = static_cast<std::size_t>(r - 1);
            rows.row({num(static_cast<std::int64_t>(k)), num(r), num(bc.a_row[i]),
                      num(bc.b_row[i]), num(bc.s_row[i]), num(bc.delta_row[i])});
        }
    }
    write_table(blocks, out, format);
    write_table(rows, out, format);
    std::cout << "wrote block tables for k <= " << k_max << " to " << out.string() << "\n";
    return 0;
}

int run_amplitude(std::int64_t n_max, int r_max, const fs::path& out,
                  const std::string& format) {
    const Pipeline pl(n_max, r_max);

    std::vector<StepWords> sw;
    std::vector<GapProfile> gaps;
    std::vector<StaircaseRow> rows;
    for (const Arch& arch : pl.arches) {
        sw.push_back(step_words(pl.tracks, arch));
        gaps.push_back(gap_profile(sw.back().p));
        rows.push_back(staircase_row(sw.back().p, arch.r));
    }

    Table stair{"staircase", {"r", "tau", "peak", "runs_ge2", "c_row"}, {}};
    for (const StaircaseRow& row : rows) {
        std::string c_row;
        for (std::size_t i = 0; i < row.c.size(); ++i)
            c_row += (i ? ";" : "") + num(row.c[i]);
        stair.row({num(static_cast<std::int64_t>(row.r)), num(row.tau), num(row.peak),
                   num(row.runs_ge2), c_row});
    }
    write_table(stair, out, format);

    json records = json::array();
    for (int r = 0; r < r_max; ++r) {
        const auto i = static_cast<std::size_t>(r);
        const InterleaveResult l1 = law1(sw[i].p);
        const InterleaveResult l2 = law2(sw[i].n);
        const RecordReport rr = record_claim_check(
            sw[i].p, sw[i].n, l1.trace, l2.word, l2.trace, rows[i], rows[i + 1],
            pl.arches[i], pl.arches[i + 1].v_plus, gaps[i].first_argmax,
            gaps[i + 1].first_argmax);
        records.push_back({{"r", rr.r},
                           {"record_index", rr.T},
                           {"fast_head_at_peak", rr.i_peak},
                           {"margin", rr.margin},
                           {"record_ok", rr.record_ok},
                           {"fact_a", rr.fact_a},
                           {"fact_b", rr.fact_b},
                           {"ballot_min_slack", rr.ballot_min_slack},
                           {"ballot_interior_ok", rr.ballot_interior_ok},
                           {"ballot_terminal", rr.ballot_terminal},
                           {"align_trace", rr.align_trace},
                           {"align_fast_head", rr.align_fast_head},
                           {"align_height", rr.align_height},
                           {"depth_max_aligned", rr.depth_max_aligned},
                           {"long_runs_eq_slack_argmax", rr.nu_eq_jstar},
                           {"runs_via_consumed_tape", rr.runs_via_s0},
                           {"conditional", rr.conditional}});
    }
    fs::create_directories(out);
    std::ofstream(out / "records.json") << records.dump(2) << "\n";

    Table env{"envelope", {"r", "peak"}, {}};
    const std::vector<double> peaks = envelope_peaks(pl.t, pl.arches);
    for (std::size_t i = 0; i < peaks.size(); ++i)
        env.row({num(static_cast<std::int64_t>(i)), num(peaks[i])});
    write_table(env, out, format);

    std::cout << "wrote staircase rows, record reports, and envelope peaks for levels 0.."
              << r_max << " to " << out.string() << "\n";
    return 0;
}

int run_verify(std::int64_t n_max, int r_max, int k_max, const fs::path& out,
               bool have_out) {
    const Pipeline pl(n_max, r_max);
    const MultiplicityTable fa = visit_multiplicities(pl.tracks.A);
    const MultiplicityTable fb = visit_multiplicities(pl.tracks.B);
    std::vector<BlockCounts> blocks;
    for (int k = 0; k <= k_max; ++k) blocks.push_back(block_table(fa, fb, k));

    Report rep;
    rep.merge(verify_arch_identities(pl.t, pl.tracks, pl.arches, &fa, &fb));
    rep.merge(verify_frequency_laws(blocks));
    rep.merge(counting_residual(fa, fb, blocks, k_max));
    const LagAnalysis lag =
        lag_analysis(pl.tracks, pl.arches, fa, fb, blocks, k_max, r_max);
    rep.merge(lag.report);
    rep.merge(stall_rule_check(pl.tracks, pl.arches));

    std::vector<StepWords> sw;
    std::vector<GapProfile> gaps;
    std::vector<StaircaseRow> rows;
    for (const Arch& arch : pl.arches) {
        sw.push_back(step_words(pl.tracks, arch));
        gaps.push_back(gap_profile(sw.back().p));
        rows.push_back(staircase_row(sw.back().p, arch.r));
    }

    // The laws themselves, as checks: rebuild each word from its predecessor.
    Report laws;
    for (int r = 0; r <= r_max; ++r) {
        const auto i = static_cast<std::size_t>(r);
        laws.add("word.law1", r, law1(sw[i].p).word == sw[i].n, false);
        if (r < r_max)
            laws.add("word.law2", r, law2(sw[i].n).word == sw[i + 1].p, false);
        const WordDiagnostics d = word_diagnostics(sw[i].p);
        laws.add("word.shape", r,
                 d.balanced && d.anti_palindromic && d.interior_positive &&
                     d.height_palindromic && d.initial_zero_run == r + 2 &&
                     d.final_one_run == r + 2,
                 false);
        laws.add("word.gap_extreme", r, gaps[i].max_slack + 2 == pl.arches[i].v_plus,
                 false);
    }
    rep.merge(laws);
    rep.merge(verify_staircase(rows, pl.arches, gaps));

    for (int r = 0; r <= r_max; ++r) {
        const auto i = static_cast<std::size_t>(r);
        const InterleaveResult l1 = law1(sw[i].p);
        rep.merge(depth_check(sw[i].p, sw[i].n, l1.trace, pl.arches[i], rows[i]));
        if (r == r_max) break;
        const InterleaveResult l2 = law2(sw[i].n);
        const RecordReport rr = record_claim_check(
            sw[i].p, sw[i].n, l1.trace, l2.word, l2.trace, rows[i], rows[i + 1],
            pl.arches[i], pl.arches[i + 1].v_plus, gaps[i].first_argmax,
            gaps[i + 1].first_argmax);
        Report rc;
        rc.add("record.point", r, rr.record_ok && rr.margin == 1 && rr.align_trace, false);
        rc.add("record.facts", r, rr.fact_a && rr.fact_b, false);
        rc.add("record.ballot", r, rr.ballot_interior_ok && rr.ballot_terminal == 0,
               false);
        rc.add("record.alignment", r,
               rr.align_fast_head && rr.align_height && rr.depth_max_aligned, true);
        rc.add("record.run_counts", r, rr.nu_eq_jstar && rr.runs_via_s0, true);
        rep.merge(rc);
    }

    print_grid(std::cout, rep);

    if (have_out) {
        Table tab{"report", {"check", "level", "pass", "conjectural", "detail"}, {}};
        for (const auto& it : rep.items)
            tab.row({it.check, num(static_cast<std::int64_t>(it.level)),
                     it.pass ? "1" : "0", it.conjectural ? "1" : "0", it.detail});
        write_table(tab, out, "csv");
        std::cout << "wrote report.csv to " << out.string() << "\n";
    }
    return settle(rep);
}

int run_compare(std::int64_t n_max, int r_max, const fs::path& out, bool have_out,
                const std::string& format) {
    const SequenceTrack t = generate_qtilde(n_max);
    const ParityTracks tracks = parity_split(t);
    if (r_max < 0) {
        // Deepest level whose full window [2u_r, 2u_{r+1}) fits the range.
        r_max = 0;
        while (2 * skeleton(r_max + 1).u_next <= n_max) ++r_max;
    }
    const std::vector<Arch> arches = detect_arches(tracks, r_max);
    const QResult q = generate_q(n_max);
    const ComparisonReport cmp = compare_sequences(t, q, arches);

    if (cmp.q_death)
        std::cout << "unperturbed companion died at n = " << *cmp.q_death
                  << "; comparison truncated there\n";
    std::cout << "compared on n <= " << cmp.n_compared << "\n";
    std::cout << "level  window_lo  window_hi  max_gap  v_plus  ratio  complete\n";
    Table tab{"comparison",
              {"r", "window_lo", "window_hi", "max_gap", "v_plus", "ratio", "complete"},
              {}};
    for (const ComparisonRow& row : cmp.rows) {
        const Arch& arch = arches[static_cast<std::size_t>(row.r)];
        const std::int64_t lo = 2 * arch.u;
        const std::int64_t hi = std::min(2 * arch.u_next - 1, cmp.n_compared);
        std::cout << std::setw(5) << row.r << "  " << std::setw(9) << lo << "  "
                  << std::setw(9) << hi << "  " << std::setw(7) << row.max_diff << "  "
                  << std::setw(6) << row.v_plus << "  " << std::fixed
                  << std::setprecision(4) << row.ratio << "  "
                  << (row.complete ? "yes" : "no") << "\n";
        tab.row({num(static_cast<std::int64_t>(row.r)), num(lo), num(hi),
                 num(row.max_diff), num(row.v_plus), num(row.ratio),
                 row.complete ? "1" : "0"});
    }
    if (have_out) write_table(tab, out, format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parity-perturbed sequence toolkit"};
    app.require_subcommand(1);

    std::int64_t n_max = 0;  // 0 means: derive from r_max / k_max
    int r_max = 3;
    int k_max = 3;
    std::string out = ".";
    bool have_out = false;
    std::string format = "csv";

    auto add_common = [&](CLI::App* sub, bool with_r, bool with_k) {
        sub->add_option("--n-max", n_max, "sequence length (0 = derive from ranges)");
        if (with_r) sub->add_option("--r-max", r_max, "deepest arch level");
        if (with_k) sub->add_option("--k-max", k_max, "deepest dyadic block");
        sub->add_option("--out", out, "output directory")->each([&](const std::string&) {
            have_out = true;
        });
        sub->add_option("--format", format, "table format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* seq = app.add_subcommand("seq", "sequence and parity tracks");
    add_common(seq, true, false);
    CLI::App* arches = app.add_subcommand("arches", "arch skeleton");
    add_common(arches, true, false);
    CLI::App* words = app.add_subcommand("words", "step words and gap profiles");
    add_common(words, true, false);
    CLI::App* freq = app.add_subcommand("freq", "dyadic block tables");
    add_common(freq, false, true);
    CLI::App* amplitude =
        app.add_subcommand("amplitude", "staircase, records, envelope");
    add_common(amplitude, true, false);
    CLI::App* verify = app.add_subcommand("verify", "run all verifiers, print the grid");
    add_common(verify, true, true);
    CLI::App* compare =
        app.add_subcommand("compare", "unperturbed companion comparison");
    compare->add_option("--n-max", n_max, "comparison length (default 200000)");
    int cmp_r_max = -1;
    compare->add_option("--r-max", cmp_r_max, "deepest level (-1 = fit to range)");
    compare->add_option("--out", out, "output directory")->each([&](const std::string&) {
        have_out = true;
    });
    compare->add_option("--format", format, "table format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*seq) return run_seq(n_max ? n_max : n_for_levels(r_max), out, format);
        if (*arches)
            return run_arches(n_max ? n_max : n_for_levels(r_max), r_max, out, format);
        if (*words)
            return run_words(n_max ? n_max : n_for_levels(r_max), r_max, out, format);
        if (*freq) return run_freq(n_max ? n_max : n_for_blocks(k_max), k_max, out, format);
        if (*amplitude)
            return run_amplitude(n_max ? n_max : n_for_levels(r_max), r_max, out, format);
        if (*verify) {
            const std::int64_t n =
                n_max ? n_max : std::max(n_for_levels(r_max), n_for_blocks(k_max));
            return run_verify(n, r_max, k_max, out, have_out);
        }
        if (*compare)
            return run_compare(n_max ? n_max : 200000, cmp_r_max, out, have_out, format);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
