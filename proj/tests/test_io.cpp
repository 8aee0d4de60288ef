#include <doctest.h>

#include <random>
#include <sstream>

#include "ldnc/io.hpp"

using namespace ldnc;

TEST_CASE("matrix text round trip") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        Gf2Matrix m(rng() % 6, rng() % 6);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, rng() & 1);
        std::stringstream ss;
        write_matrix(ss, m);
        CHECK(read_matrix(ss) == m);
    }
}

TEST_CASE("matrix text exact bytes") {
    std::stringstream ss;
    write_matrix(ss, Gf2Matrix::from_rows({{1, 0}, {1, 1}}));
    CHECK(ss.str() == "2 2\n10\n11\n");
}

TEST_CASE("matrix text rejects garbage") {
    auto fails = [](const std::string& s) {
        std::istringstream in(s);
        CHECK_THROWS_AS(read_matrix(in), std::runtime_error);
    };
    fails("");
    fails("2\n10\n11\n");
    fails("2 2 7\n10\n11\n");
    fails("2 2\n10\n");
    fails("2 2\n10\n111\n");
    fails("2 2\n10\n1x\n");
    fails("-1 2\n");
}

TEST_CASE("params JSON") {
    const auto j = to_json(NetworkParams{3, 1, 3, 2, 2});
    CHECK(j["n1"] == 3);
    CHECK(j["q"] == 3);
}

TEST_CASE("capacity report JSON") {
    const auto j = to_json(capacity(NetworkParams{3, 1, 3, 2, 2}));
    CHECK(j["case"] == "Case1");
    CHECK(j["capacity"] == 3);
    CHECK(j["k"] == 2);
    CHECK(j["j"] == 1);
    CHECK(j["swapped"] == false);
    CHECK(j["bound_terms"]["n3"] == 3);
    CHECK(j["cut"] == 3);

    const auto j5 = to_json(capacity(NetworkParams{2, 2, 1, 1, 3}));
    CHECK(j5["capacity"] == 0);
    CHECK(j5["k"].is_null());
}

TEST_CASE("verification report JSON is stable across runs") {
    const auto a = to_json(verify_grid(1, 20)).dump();
    const auto b = to_json(verify_grid(1, 20)).dump();
    CHECK(a == b);  // elapsed time must not leak into the report
    CHECK(to_json(verify_grid(1, 20))["passed"] == true);
}
