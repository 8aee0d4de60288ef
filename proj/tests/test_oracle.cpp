#include <doctest.h>

#include <stdexcept>

#include "ldnc/capacity.hpp"
#include "ldnc/oracle.hpp"

using namespace ldnc;

TEST_CASE("brute_force_capacity point values") {
    CHECK(brute_force_capacity(NetworkParams{3, 1, 3, 2, 2}, 20) == 3);
    CHECK(brute_force_capacity(NetworkParams{2, 2, 1, 2, 2}, 20) == 0);
    CHECK(brute_force_capacity(NetworkParams{1, 0, 1, 0, 0}, 20) == 1);
    CHECK(brute_force_capacity(NetworkParams{0, 0, 0, 0, 0}, 20) == 0);
}

TEST_CASE("brute_force_capacity respects the bit budget") {
    // 2*3 + 2*3 = 12 bits: fits in 12, not in 11.
    const NetworkParams p{3, 3, 2, 2, 0};
    CHECK(brute_force_capacity(p, 12).has_value());
    CHECK(!brute_force_capacity(p, 11).has_value());
}

TEST_CASE("brute force is swap-invariant and cut-bounded") {
    for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n2 <= 2; ++n2)
            for (int n3 = 0; n3 <= 2; ++n3)
                for (int n4 = 0; n4 <= 2; ++n4)
                    for (int m = 0; m <= 2; ++m) {
                        const NetworkParams p{n1, n2, n3, n4, m};
                        const NetworkParams sw{n2, n1, n4, n3, m};
                        const auto b = brute_force_capacity(p, 16);
                        REQUIRE(b.has_value());
                        CHECK(b == brute_force_capacity(sw, 16));
                        CHECK(*b <= cut_bound(p));
                    }
}

TEST_CASE("verify_grid max_gain 2") {
    const auto rep = verify_grid(2, 16);
    CHECK(rep.total_points == 243);
    CHECK(rep.mismatches.empty());
    CHECK(rep.skipped.empty());
    CHECK(rep.passed());
}

TEST_CASE("verify_grid degenerate") {
    const auto rep = verify_grid(0, 20);
    CHECK(rep.total_points == 1);
    CHECK(rep.passed());
}

TEST_CASE("verify_grid reports skips under a tiny budget") {
    const auto rep = verify_grid(2, 4);
    CHECK(rep.total_points == 243);
    CHECK(!rep.skipped.empty());
    CHECK(rep.mismatches.empty());
}

TEST_CASE("verify_grid is deterministic across thread counts") {
    const auto a = verify_grid(1, 20, 1);
    const auto b = verify_grid(1, 20, 4);
    CHECK(a.total_points == b.total_points);
    CHECK(a.mismatches.size() == b.mismatches.size());
    CHECK(a.skipped.size() == b.skipped.size());
}

TEST_CASE("check_lemma1") {
    CHECK(check_lemma1(1));
    CHECK(check_lemma1(2));
    CHECK(check_lemma1(3));
    CHECK_THROWS_AS(check_lemma1(5), std::invalid_argument);
}

TEST_CASE("check_lemma2") {
    CHECK(check_lemma2(2000, 6, 6, 1));
    CHECK(check_lemma2(500, 8, 8, 42));
    // Deterministic under a fixed seed: same verdict, trivially, but the
    // sampled stream must not depend on global state.
    CHECK(check_lemma2(100, 4, 4, 7) == check_lemma2(100, 4, 4, 7));
    CHECK_THROWS_AS(check_lemma2(0, 4, 4, 0), std::invalid_argument);
}
