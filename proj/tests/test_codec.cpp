#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ldnc/capacity.hpp"
#include "ldnc/codec.hpp"
#include "ldnc/network.hpp"

using namespace ldnc;

namespace {

Gf2Matrix bits_vector(std::size_t n, std::uint64_t bits) {
    Gf2Matrix v(n, 1);
    for (std::size_t i = 0; i < n; ++i) v.set(i, 0, (bits >> i) & 1);
    return v;
}

Gf2Matrix random_square(std::mt19937_64& rng, std::size_t q) {
    Gf2Matrix m(q, q);
    for (std::size_t r = 0; r < q; ++r)
        for (std::size_t c = 0; c < q; ++c) m.set(r, c, rng() & 1);
    return m;
}

}  // namespace

TEST_CASE("build_codebook basic shapes") {
    const auto cb = build_codebook(Gf2Matrix::identity(2), Gf2Matrix(2, 2));
    CHECK(cb.rate == 2);
    CHECK(cb.encoder.cols() == 2);
    CHECK(rank(cb.encoder) == 2);

    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        const auto g = random_square(rng, 3);
        CHECK(build_codebook(g, g).rate == 0);  // full interference
    }

    const NetworkParams p{3, 1, 3, 2, 2};
    const auto s = construct_scheme(p);
    CHECK(build_codebook(compose_gs(p, s), compose_gm(p, s)).rate == 3);
}

TEST_CASE("codebook invariants on random transfer pairs") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
        const std::size_t q = rng() % 5;
        const auto gs = random_square(rng, q);
        const auto gm = random_square(rng, q);
        const auto cb = build_codebook(gs, gm);
        CHECK(cb.rate == static_cast<int>(rank(gs) - rank_intersection(gs, gm)));
        CHECK(rank(cb.encoder) == cb.encoder.cols());
        const auto r = static_cast<std::size_t>(cb.rate);
        const auto s_part = cb.decode_basis.submatrix(0, 0, q, r);
        const auto m_part = cb.decode_basis.submatrix(0, r, q, cb.decode_basis.cols() - r);
        CHECK(rank_intersection(s_part, m_part) == 0);
        CHECK(rank_intersection(s_part, gm) == 0);  // S meets range(G_M) only at zero
    }
}

TEST_CASE("codebook rate equals achievable_rate for arbitrary schemes") {
    std::mt19937_64 rng(3);
    const NetworkParams grid[] = {{2, 1, 2, 1, 1}, {3, 2, 3, 1, 2}, {4, 3, 2, 4, 1},
                                  {3, 3, 2, 1, 3}, {2, 2, 2, 2, 2}};
    for (const auto& p : grid)
        for (int t = 0; t < 30; ++t) {
            const CodingScheme s{random_square(rng, p.q()), random_square(rng, p.q())};
            const auto cb = build_codebook(compose_gs(p, s), compose_gm(p, s));
            CHECK(cb.rate == achievable_rate(p, s));
        }
}

TEST_CASE("encode") {
    const auto cb = build_codebook(Gf2Matrix::identity(2), Gf2Matrix(2, 2));
    CHECK(encode(cb, Gf2Matrix(2, 1)) == Gf2Matrix(2, 1));
    // Injectivity, exhaustive.
    for (std::uint64_t a = 0; a < 4; ++a)
        for (std::uint64_t b = a + 1; b < 4; ++b)
            CHECK(encode(cb, bits_vector(2, a)) != encode(cb, bits_vector(2, b)));
    CHECK_THROWS_AS(encode(cb, Gf2Matrix(3, 1)), std::invalid_argument);
}

TEST_CASE("decode inverts the channel for every disturbance") {
    // Exhaustive round trip over all messages and all disturbances.
    std::mt19937_64 rng(4);
    for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n2 <= 2; ++n2)
            for (int n3 = 0; n3 <= 2; ++n3)
                for (int n4 = 0; n4 <= 2; ++n4)
                    for (int m = 0; m <= 2; ++m) {
                        const NetworkParams p{n1, n2, n3, n4, m};
                        const auto q = static_cast<std::size_t>(p.q());
                        const auto s = construct_scheme(p);
                        const auto cb =
                            build_codebook(compose_gs(p, s), compose_gm(p, s));
                        for (std::uint64_t msg = 0; msg < (1u << cb.rate); ++msg)
                            for (std::uint64_t xm = 0; xm < (std::uint64_t(1) << q); ++xm) {
                                const auto mv = bits_vector(cb.rate, msg);
                                const auto y = transmit(p, s, encode(cb, mv),
                                                        bits_vector(q, xm));
                                const auto dec = decode(cb, y);
                                REQUIRE(dec.has_value());
                                CHECK(*dec == mv);
                            }
                    }
}

TEST_CASE("decode on non-optimal random schemes") {
    std::mt19937_64 rng(5);
    const NetworkParams p{3, 1, 2, 3, 2};
    const auto q = static_cast<std::size_t>(p.q());
    for (int t = 0; t < 20; ++t) {
        const CodingScheme s{random_square(rng, q), random_square(rng, q)};
        const auto cb = build_codebook(compose_gs(p, s), compose_gm(p, s));
        for (std::uint64_t msg = 0; msg < (1u << cb.rate); ++msg)
            for (std::uint64_t xm = 0; xm < (std::uint64_t(1) << q); ++xm) {
                const auto mv = bits_vector(cb.rate, msg);
                const auto y = transmit(p, s, encode(cb, mv), bits_vector(q, xm));
                const auto dec = decode(cb, y);
                REQUIRE(dec.has_value());
                CHECK(*dec == mv);
            }
    }
}

TEST_CASE("decode rejects observations outside the span") {
    // G_S and G_M both map into the span of e2 only; e1 is unreachable.
    const auto gs = Gf2Matrix::from_rows({{0, 0}, {1, 0}});
    const auto cb = build_codebook(gs, Gf2Matrix(2, 2));
    CHECK(!decode(cb, Gf2Matrix::from_rows({{1}, {0}})).has_value());
    CHECK(decode(cb, Gf2Matrix::from_rows({{0}, {1}})).has_value());
}

TEST_CASE("rate-0 codebook decodes the empty message") {
    const auto g = Gf2Matrix::identity(2);
    const auto cb = build_codebook(g, g);
    CHECK(cb.rate == 0);
    for (std::uint64_t y = 0; y < 4; ++y) {
        const auto dec = decode(cb, bits_vector(2, y));
        REQUIRE(dec.has_value());
        CHECK(dec->rows() == 0);
    }
}
