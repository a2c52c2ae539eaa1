#include "qseq/core_sequences.hpp"

namespace qseq {

// ---------------------------------------------------------------- generators

SequenceTrack generate_qtilde(std::int64_t n_max) {
    if (n_max < 2) throw InsufficientRange("need n_max >= 2 for the seed values");
    SequenceTrack t;
    t.name = "qtilde";
    t.v.assign(static_cast<std::size_t>(n_max) + 1, 0);
    t.v[1] = 1;
    t.v[2] = 1;
    for (std::int64_t n = 3; n <= n_max; ++n) {
        const std::int64_t i1 = n - t.v[static_cast<std::size_t>(n - 1)];
        const std::int64_t i2 = n - t.v[static_cast<std::size_t>(n - 2)];
        if (i1 < 1 || i1 >= n || i2 < 1 || i2 >= n) throw IllDefined(n);
        const std::int64_t sign = (n % 2 == 0) ? 1 : -1;
        const std::int64_t val =
            t.v[static_cast<std::size_t>(i1)] + t.v[static_cast<std::size_t>(i2)] + sign;
        if (val % 2 == 0) throw NotOdd(n);
        if (val < 1 || val > n) throw IllDefined(n);
        t.v[static_cast<std::size_t>(n)] = val;
    }
    return t;
}

QResult generate_q(std::int64_t n_max) {
    if (n_max < 2) throw InsufficientRange("need n_max >= 2 for the seed values");
    QResult res;
    res.track.name = "q";
    res.track.v.assign(static_cast<std::size_t>(n_max) + 1, 0);
    auto& v = res.track.v;
    v[1] = 1;
    v[2] = 1;
    for (std::int64_t n = 3; n <= n_max; ++n) {
        const std::int64_t i1 = n - v[static_cast<std::size_t>(n - 1)];
        const std::int64_t i2 = n - v[static_cast<std::size_t>(n - 2)];
        if (i1 < 1 || i1 >= n || i2 < 1 || i2 >= n) {
            // The unperturbed recurrence has no survival proof; report the
            // death instead of throwing and hand back the defined prefix.
            res.death = n;
            v.resize(static_cast<std::size_t>(n));
            return res;
        }
        v[static_cast<std::size_t>(n)] =
            v[static_cast<std::size_t>(i1)] + v[static_cast<std::size_t>(i2)];
    }
    return res;
}

SequenceTrack generate_conway_perturbed(std::int64_t n_max) {
    if (n_max < 2) throw InsufficientRange("need n_max >= 2 for the seed values");
    SequenceTrack t;
    t.name = "conway_perturbed";
    t.v.assign(static_cast<std::size_t>(n_max) + 1, 0);
    t.v[1] = 1;
    t.v[2] = 1;
    for (std::int64_t n = 3; n <= n_max; ++n) {
        const std::int64_t prev = t.v[static_cast<std::size_t>(n - 1)];
        const std::int64_t i1 = prev;          // inner self-composition c(c(n-1))
        const std::int64_t i2 = n - prev;
        if (i1 < 1 || i1 >= n || i2 < 1 || i2 >= n) throw IllDefined(n);
        const std::int64_t sign = (n % 2 == 0) ? 1 : -1;
        const std::int64_t val =
            t.v[static_cast<std::size_t>(i1)] + t.v[static_cast<std::size_t>(i2)] + sign;
        if (val < 1 || val > n) throw IllDefined(n);
        t.v[static_cast<std::size_t>(n)] = val;
    }
    return t;
}

// -------------------------------------------------------------- parity split

ParityTracks parity_split(const SequenceTrack& t) {
    const std::int64_t m_max = t.n_max() / 2;
    if (m_max < 1) throw InsufficientRange("need n_max >= 2 to form parity tracks");

    ParityTracks p;
    p.m_max = m_max;
    p.A.name = "A";
    p.B.name = "B";
    p.sigma.name = "sigma";
    p.delta.name = "delta";
    p.A.v.assign(static_cast<std::size_t>(m_max) + 1, 0);
    p.B.v.assign(static_cast<std::size_t>(m_max) + 1, 0);
    p.sigma.v.assign(static_cast<std::size_t>(m_max) + 1, 0);
    p.delta.v.assign(static_cast<std::size_t>(m_max) + 1, 0);

    for (std::int64_t m = 1; m <= m_max; ++m) {
        const std::int64_t odd = t(2 * m - 1);
        const std::int64_t even = t(2 * m);
        if (odd % 2 == 0) throw NotOdd(2 * m - 1);
        if (even % 2 == 0) throw NotOdd(2 * m);
        const std::int64_t a = (odd + 1) / 2;
        const std::int64_t b = (even + 1) / 2;
        p.A.v[static_cast<std::size_t>(m)] = a;
        p.B.v[static_cast<std::size_t>(m)] = b;
        p.sigma.v[static_cast<std::size_t>(m)] = a + b - m;
        p.delta.v[static_cast<std::size_t>(m)] = b - a;

        // Exact reconstruction from the split tracks.
        const std::int64_t sig = a + b - m, del = b - a;
        if (even != m - 1 + sig + del || odd != m - 1 + sig - del)
            throw Error("parity reconstruction failed at m = " + std::to_string(m));
        // Monotone steps in {0,1}.
        if (m > 1) {
            const std::int64_t da = a - p.A.v[static_cast<std::size_t>(m - 1)];
            const std::int64_t db = b - p.B.v[static_cast<std::size_t>(m - 1)];
            if (da < 0 || da > 1)
                throw Error("A step outside {0,1} at m = " + std::to_string(m));
            if (db < 0 || db > 1)
                throw Error("B step outside {0,1} at m = " + std::to_string(m));
        }
    }
    return p;
}

}  // namespace qseq
