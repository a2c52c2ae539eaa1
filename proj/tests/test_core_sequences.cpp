// Generators and the parity split, checked against hand-computed prefixes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qseq/core_sequences.hpp"

using namespace qseq;

TEST_CASE("perturbed sequence matches the hand-computed prefix") {
    const SequenceTrack t = generate_qtilde(24);
    const std::vector<std::int64_t> want = {1, 1, 1, 3, 3, 3, 5,  5,  5,  7,  5,  9,
                                            7, 9, 7, 11, 9, 11, 11, 11, 13, 11, 15, 13};
    for (std::int64_t n = 1; n <= 24; ++n) CHECK(t(n) == want[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("parity split reproduces the small table") {
    const SequenceTrack t = generate_qtilde(24);
    const ParityTracks p = parity_split(t);
    REQUIRE(p.m_max == 12);

    const std::vector<std::int64_t> a = {1, 1, 2, 3, 3, 3, 4, 4, 5, 6, 7, 8};
    const std::vector<std::int64_t> b = {1, 2, 2, 3, 4, 5, 5, 6, 6, 6, 6, 7};
    const std::vector<std::int64_t> sig = {1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 3};
    const std::vector<std::int64_t> del = {0, 1, 0, 0, 1, 2, 1, 2, 1, 0, -1, -1};
    for (std::int64_t m = 1; m <= 12; ++m) {
        const auto i = static_cast<std::size_t>(m - 1);
        CHECK(p.A(m) == a[i]);
        CHECK(p.B(m) == b[i]);
        CHECK(p.sigma(m) == sig[i]);
        CHECK(p.delta(m) == del[i]);
    }
}

TEST_CASE("values stay odd and inside [1, n] over a long prefix") {
    const SequenceTrack t = generate_qtilde(20000);
    for (std::int64_t n = 1; n <= t.n_max(); ++n) {
        CHECK(t(n) % 2 == 1);
        CHECK(t(n) >= 1);
        CHECK(t(n) <= n);
    }
}

TEST_CASE("unperturbed companion starts 1 1 2 3 3 4 and survives a while") {
    const QResult q = generate_q(5000);
    CHECK(!q.death.has_value());
    const std::vector<std::int64_t> want = {1, 1, 2, 3, 3, 4};
    for (std::int64_t n = 1; n <= 6; ++n)
        CHECK(q.track(n) == want[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("perturbed self-composition companion matches its prefix") {
    const SequenceTrack c = generate_conway_perturbed(12);
    const std::vector<std::int64_t> want = {1, 1, 1, 3, 1, 3, 3, 3, 3, 5, 3, 5};
    for (std::int64_t n = 1; n <= 12; ++n)
        CHECK(c(n) == want[static_cast<std::size_t>(n - 1)]);
    const SequenceTrack big = generate_conway_perturbed(10000);
    for (std::int64_t n = 1; n <= big.n_max(); ++n) {
        CHECK(big(n) >= 1);
        CHECK(big(n) <= n);
    }
}

TEST_CASE("generators refuse ranges too short for the seeds") {
    CHECK_THROWS_AS(generate_qtilde(1), InsufficientRange);
    CHECK_THROWS_AS(generate_q(0), InsufficientRange);
}

TEST_CASE("parity split rejects a track with an even value") {
    SequenceTrack t = generate_qtilde(24);
    t.v[7] = 4;  // corrupt one entry
    CHECK_THROWS_AS(parity_split(t), NotOdd);
}
