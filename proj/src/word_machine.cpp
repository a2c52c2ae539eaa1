#include "qseq/word_machine.hpp"

#include <bit>

namespace qseq {

// ------------------------------------------------------------------ BitWord

BitWord BitWord::from_bits(const std::vector<std::uint8_t>& bits) {
    Builder b(bits.size());
    for (std::uint8_t x : bits) b.push(x);
    return b.freeze();
}

BitWord BitWord::from_string(std::string_view s) {
    Builder b(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw MalformedWord("word characters must be 0 or 1");
        b.push(c - '0');
    }
    return b.freeze();
}

void BitWord::finish() {
    // Checkpoint i holds the zero count of the first 64*i bits, so a prefix
    // query touches one checkpoint and one masked popcount.
    ck_.assign(words_.size() + 1, 0);
    std::int64_t z = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        ck_[i] = z;
        const std::size_t lo = i * 64;
        const std::size_t valid = (n_ - lo < 64) ? (n_ - lo) : 64;
        std::uint64_t w = words_[i];
        if (valid < 64) w &= (std::uint64_t{1} << valid) - 1;
        z += static_cast<std::int64_t>(valid) - std::popcount(w);
    }
    ck_[words_.size()] = z;
    zeros_ = z;
}

std::int64_t BitWord::zeros_prefix(std::size_t t) const {
    const std::size_t wi = t >> 6;
    const std::size_t rem = t & 63;
    std::int64_t z = ck_[wi];
    if (rem != 0) {
        const std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
        z += static_cast<std::int64_t>(rem) - std::popcount(words_[wi] & mask);
    }
    return z;
}

std::string BitWord::str() const {
    std::string s(n_, '0');
    for (std::size_t k = 0; k < n_; ++k)
        if (bit(k)) s[k] = '1';
    return s;
}

std::vector<std::uint8_t> BitWord::unpack() const {
    std::vector<std::uint8_t> out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = static_cast<std::uint8_t>(bit(k));
    return out;
}

BitWord::Builder::Builder(std::size_t reserve_bits) {
    words_.reserve(reserve_bits / 64 + 1);
}

void BitWord::Builder::push(int b) {
    const std::size_t k = n_++;
    if ((k & 63) == 0) words_.push_back(0);
    if (b) words_[k >> 6] |= std::uint64_t{1} << (k & 63);
}

BitWord BitWord::Builder::freeze() {
    BitWord w;
    w.words_ = std::move(words_);
    w.n_ = n_;
    words_.clear();
    n_ = 0;
    w.finish();
    return w;
}

// ------------------------------------------------------- profiles and shape

std::vector<std::int64_t> height_profile(const BitWord& w) {
    std::vector<std::int64_t> h(w.size() + 1, 0);
    for (std::size_t t = 0; t < w.size(); ++t) h[t + 1] = h[t] + (w.bit(t) ? -1 : 1);
    return h;
}

HeightPeak height_peak(const BitWord& w) {
    HeightPeak peak{0, 0};
    std::int64_t h = 0;
    for (std::size_t t = 0; t < w.size(); ++t) {
        h += w.bit(t) ? -1 : 1;
        if (h > peak.max) {
            peak.max = h;
            peak.first_argmax = static_cast<std::int64_t>(t) + 1;
        }
    }
    return peak;
}

WordDiagnostics word_diagnostics(const BitWord& w) {
    WordDiagnostics d;
    d.length = w.size();
    const std::size_t n = w.size();
    if (n == 0) return d;

    d.balanced = (w.zeros() == w.ones());

    d.anti_palindromic = true;
    for (std::size_t k = 0; k < n; ++k)
        if (w.bit(k) + w.bit(n - 1 - k) != 1) {
            d.anti_palindromic = false;
            break;
        }

    std::int64_t h = 0, min_interior = 0;
    bool have_interior = false;
    d.max_height = 0;
    for (std::size_t t = 0; t < n; ++t) {
        h += w.bit(t) ? -1 : 1;
        if (h > d.max_height) {
            d.max_height = h;
            d.first_argmax = static_cast<std::int64_t>(t) + 1;
        }
        if (t + 1 < n) {
            min_interior = have_interior ? std::min(min_interior, h) : h;
            have_interior = true;
        }
    }
    d.interior_positive = !have_interior || min_interior >= 1;

    d.height_palindromic = true;
    for (std::size_t t = 0; t <= n / 2; ++t)
        if (w.height(t) != w.height(n - t)) {
            d.height_palindromic = false;
            break;
        }

    while (d.initial_zero_run < static_cast<std::int64_t>(n) &&
           w.bit(static_cast<std::size_t>(d.initial_zero_run)) == 0)
        ++d.initial_zero_run;
    while (d.final_one_run < static_cast<std::int64_t>(n) &&
           w.bit(n - 1 - static_cast<std::size_t>(d.final_one_run)) == 1)
        ++d.final_one_run;
    return d;
}

// ------------------------------------------------------------- gap profiles

GapProfile gap_profile(const BitWord& w) {
    if (w.size() == 0 || w.bit(w.size() - 1) != 1)
        throw MalformedWord("gap profile needs a word ending in 1");
    if (w.zeros() != w.ones())
        throw MalformedWord("gap profile needs a balanced word");

    GapProfile g;
    g.ones_pos.reserve(static_cast<std::size_t>(w.ones()));
    for (std::size_t k = 0; k < w.size(); ++k)
        if (w.bit(k)) g.ones_pos.push_back(static_cast<std::int64_t>(k));

    g.gaps.resize(g.ones_pos.size());
    g.slack.resize(g.ones_pos.size());
    bool first = true;
    for (std::size_t j = 0; j < g.ones_pos.size(); ++j) {
        g.gaps[j] = g.ones_pos[j] - (j ? g.ones_pos[j - 1] : 0);
        g.slack[j] = g.ones_pos[j] - 2 * static_cast<std::int64_t>(j) - 2;
        // The slack is the height just before the j-th one, shifted by 2;
        // this pins the gap view to the excursion view and must be exact.
        if (g.slack[j] != w.height(static_cast<std::size_t>(g.ones_pos[j])) - 2)
            throw Error("gap slack disagrees with height at one #" + std::to_string(j));
        if (first || g.slack[j] > g.max_slack) {
            g.max_slack = g.slack[j];
            g.first_argmax = static_cast<std::int64_t>(j);
            first = false;
        }
    }

    // Mirror over the first a-1 gaps only; the final gap (ending at the last
    // one) stands outside the reflection.
    g.mirror_symmetric = true;
    const std::size_t a = g.gaps.size();
    for (std::size_t j = 0; j + 1 < a; ++j)
        if (g.gaps[j] != g.gaps[a - 2 - j]) {
            g.mirror_symmetric = false;
            break;
        }
    return g;
}

// --------------------------------------------------------------- interleave

InterleaveResult interleave(const BitWord& x, const BitWord& y, int start_state) {
    const std::size_t total = x.size() + y.size();
    InterleaveResult res;
    res.trace.reserve(total + 1);
    BitWord::Builder out(total);

    std::int64_t i = 0, j = 0;
    std::uint8_t state = static_cast<std::uint8_t>(start_state & 1);
    for (std::size_t t = 0; t < total; ++t) {
        res.trace.push_back({i, j, state});
        int b;
        // The state names the tape to read; an exhausted tape yields its
        // turn to the other one.
        const bool read_x =
            (state == 0) ? (i < static_cast<std::int64_t>(x.size()))
                         : (j >= static_cast<std::int64_t>(y.size()));
        if (read_x) {
            b = x.bit(static_cast<std::size_t>(i));
            ++i;
        } else {
            b = y.bit(static_cast<std::size_t>(j));
            ++j;
        }
        out.push(b);
        state = static_cast<std::uint8_t>(b);
    }
    res.trace.push_back({i, j, state});
    res.word = out.freeze();
    return res;
}

std::pair<BitWord, BitWord> extract(const BitWord& w) {
    if (w.size() < 2 || w.bit(0) != 0 || w.bit(w.size() - 1) != 1)
        throw BadBoundary("extraction needs a word starting with 0 and ending with 1");
    BitWord::Builder e0, e1;
    e0.push(w.bit(0));
    for (std::size_t k = 1; k < w.size(); ++k) {
        if (w.bit(k - 1) == 0)
            e0.push(w.bit(k));
        else
            e1.push(w.bit(k));
    }
    return {e0.freeze(), e1.freeze()};
}

InterleaveResult law1(const BitWord& p) {
    if (p.size() < 3) throw MalformedWord("law 1 needs at least 3 bits");
    BitWord::Builder fast(p.size() - 2), slow(p.size() - 1);
    for (std::size_t k = 2; k < p.size(); ++k) fast.push(p.bit(k));
    for (std::size_t k = 0; k + 1 < p.size(); ++k) slow.push(p.bit(k));
    return interleave(fast.freeze(), slow.freeze(), 1);
}

InterleaveResult law2(const BitWord& n) {
    if (n.size() == 0) throw MalformedWord("law 2 needs a nonempty word");
    BitWord::Builder s0(n.size() + 3), s1(n.size() + 1);
    s0.push(0);
    s0.push(0);
    for (std::size_t k = 0; k < n.size(); ++k) s0.push(n.bit(k));
    s0.push(1);
    s1.push(0);
    for (std::size_t k = 0; k < n.size(); ++k) s1.push(n.bit(k));
    return interleave(s0.freeze(), s1.freeze(), 0);
}

// --------------------------------------------------------------- step words

StepWords step_words(const ParityTracks& tracks, const Arch& arch) {
    if (tracks.m_max <= arch.u_next)
        throw InsufficientRange("tracks end before u_" + std::to_string(arch.r + 1) +
                                " = " + std::to_string(arch.u_next));
    StepWords sw;
    BitWord::Builder p(static_cast<std::size_t>(arch.v - arch.u));
    for (std::int64_t m = arch.u; m < arch.v; ++m)
        p.push(static_cast<int>(tracks.A(m + 1) - tracks.A(m)));
    sw.p = p.freeze();

    BitWord::Builder n(static_cast<std::size_t>(arch.u_next - arch.v));
    for (std::int64_t m = arch.v; m < arch.u_next; ++m)
        n.push(static_cast<int>(tracks.B(m + 1) - tracks.B(m)));
    sw.n = n.freeze();

    if (static_cast<std::int64_t>(sw.p.size()) != 2 * arch.a)
        throw Error("positive step word has wrong length at level " +
                    std::to_string(arch.r));
    if (static_cast<std::int64_t>(sw.n.size()) != 4 * arch.a - 3)
        throw Error("negative step word has wrong length at level " +
                    std::to_string(arch.r));
    return sw;
}

}  // namespace qseq
